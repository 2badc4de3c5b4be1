#pragma once

// The character ring Z[X(T)] and the isobaric Demazure operators, giving
// characters and dimensions of the modules H^0(w, lambda).

#include <map>
#include <stdexcept>

#include "demsup/weyl.hpp"

namespace demsup {

/// Finite integer-multiplicity function on the weight lattice; zero
/// multiplicities are never stored.
class Character {
 public:
  Character() = default;

  static Character monomial(WeightVec mu, Int mult = 1) {
    Character f;
    f.add(std::move(mu), mult);
    return f;
  }

  const std::map<WeightVec, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Int multiplicity(const WeightVec& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(WeightVec mu, Int mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(mu), mult);
    if (!inserted) {
      it->second = checked_add(it->second, mult);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Character& operator+=(const Character& o) {
    for (const auto& [mu, m] : o.terms_) add(mu, m);
    return *this;
  }

  friend Character operator+(Character a, const Character& b) {
    a += b;
    return a;
  }

  friend Character operator*(const Character& a, const Character& b) {
    Character out;
    for (const auto& [mu, m] : a.terms_)
      for (const auto& [nu, n] : b.terms_) out.add(mu + nu, checked_mul(m, n));
    return out;
  }

  bool operator==(const Character&) const = default;

 private:
  std::map<WeightVec, Int> terms_;
};

/// The isobaric Demazure operator D_i, extended linearly from its action
/// on a monomial e^mu with m = <mu, alpha_i^vee>:
///   m >= 0 : e^mu + e^{mu-alpha_i} + ... + e^{mu-m alpha_i}
///   m = -1 : 0
///   m <= -2: -(e^{mu+alpha_i} + ... + e^{mu+(-m-1) alpha_i})
inline Character demazure_step(const RootSystem& rs, const Character& f, int i) {
  const WeightVec alpha = rs.simple_root_as_weight(i);
  Character out;
  for (const auto& [mu, mult] : f.terms()) {
    const Int m = mu.coords[i - 1];
    if (m >= 0) {
      WeightVec nu = mu;
      for (Int j = 0; j <= m; ++j) {
        out.add(nu, mult);
        if (j < m) nu = nu - alpha;
      }
    } else if (m <= -2) {
      WeightVec nu = mu;
      for (Int j = 1; j <= -m - 1; ++j) {
        nu = nu + alpha;
        out.add(nu, -mult);
      }
    }
    // m == -1: the string is empty.
  }
  return out;
}

/// ch H^0(w, lambda): apply D along the lex-least reduced word of w,
/// innermost letter first.  Independent of the reduced word chosen.
inline Character demazure_character(const RootSystem& rs, const WeylElement& w, const WeightVec& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank())
    throw std::invalid_argument("demsup: weight rank mismatch");
  if (!lambda.is_dominant()) throw std::domain_error("demsup: demazure_character needs a dominant weight");
  const std::vector<int> word = reduced_word(w);
  Character f = Character::monomial(lambda);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_step(rs, f, *it);
  return f;
}

inline Int dimension(const Character& f) {
  Int d = 0;
  for (const auto& [mu, m] : f.terms()) d = checked_add(d, m);
  return d;
}

/// Closed form for dim H^0(s_a s_b, lambda) in rank 2:
/// (lambda_2 + 1)(2 lambda_1 + lambda_2 + 2) / 2.
inline Int a2_demazure_dim_formula(const WeightVec& lambda) {
  if (lambda.coords.size() != 2) throw std::domain_error("demsup: rank-2 formula");
  if (!lambda.is_dominant()) throw std::domain_error("demsup: dominant weight required");
  const Int l1 = lambda.coords[0], l2 = lambda.coords[1];
  return checked_mul(l2 + 1, checked_add(checked_mul(2, l1), l2 + 2)) / 2;
}

}  // namespace demsup
