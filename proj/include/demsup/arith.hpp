#pragma once

#include <cstdint>
#include <stdexcept>

namespace demsup {

using Int = std::int64_t;

// Checked machine arithmetic; nothing in this library is allowed to wrap.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("demsup: integer overflow in +");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("demsup: integer overflow in -");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("demsup: integer overflow in *");
  return r;
}

inline bool divides(Int p, Int n) { return n % p == 0; }

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(Int p) {
  if (!is_prime(p)) throw std::domain_error("demsup: p must be prime, got " + std::to_string(p));
}

}  // namespace demsup
