#pragma once

// Modular weight analysis: the positive roots Phi_{lambda,p} whose
// shifted pairing is divisible by p, p-regularity, the stabilizer set
// J_lambda, and conjugation of Phi_{lambda,p} onto a subsystem spanned
// by simple roots.

#include <optional>

#include "demsup/weyl.hpp"

namespace demsup {

/// Phi_{lambda,p} = { alpha in Phi+ : <lambda + rho, alpha^vee> in pZ }.
inline std::vector<RootVec> phi_lambda_p(const RootSystem& rs, const WeightVec& lambda, Int p) {
  require_prime(p);
  const WeightVec shifted = lambda + rs.rho();
  std::vector<RootVec> out;
  for (const RootVec& alpha : rs.positive_roots())
    if (divides(p, rs.pairing(shifted, alpha))) out.push_back(alpha);
  return out;
}

inline bool is_p_regular(const RootSystem& rs, const WeightVec& lambda, Int p) {
  return phi_lambda_p(rs, lambda, p).empty();
}

/// J_lambda = { i : <lambda, alpha_i^vee> = 0 }.
inline SimpleSubset j_lambda(const RootSystem& rs, const WeightVec& lambda) {
  SimpleSubset s;
  for (int i = 1; i <= rs.rank(); ++i)
    if (lambda.coords[i - 1] == 0) s.mask |= 1u << (i - 1);
  return s;
}

/// Every prime is good for type A.
inline bool is_good_prime(const RootSystem& rs, Int p) {
  (void)p;
  return rs.type_letter() == 'A';
}

/// The positive roots supported on I, i.e. Phi_I^+.
inline std::vector<RootVec> positive_roots_of(const RootSystem& rs, const SimpleSubset& I) {
  std::vector<RootVec> out;
  for (const RootVec& alpha : rs.positive_roots()) {
    bool inside = true;
    for (int i = 1; i <= rs.rank(); ++i)
      if (alpha.coeffs[i - 1] != 0 && !I.contains(i)) {
        inside = false;
        break;
      }
    if (inside) out.push_back(alpha);
  }
  return out;
}

struct Conjugation {
  WeylElement x;
  SimpleSubset target;  // I with x(phi) = Phi_I^+
};

namespace detail {

inline bool maps_onto(const WeylElement& x, const std::vector<RootVec>& phi, const std::vector<RootVec>& target) {
  if (phi.size() != target.size()) return false;
  std::vector<RootVec> image;
  image.reserve(phi.size());
  for (const RootVec& alpha : phi) image.push_back(act_on_root(x, alpha));
  std::sort(image.begin(), image.end());
  return image == target;
}

// Candidates ordered by (length of x, subset mask, reduced word); the
// first x carrying phi onto the positive roots of some I wins.
inline std::optional<Conjugation> conjugate_search(const RootSystem& rs, const std::vector<RootVec>& phi,
                                                   const SimpleSubset& group_support,
                                                   const SimpleSubset& target_universe) {
  std::vector<WeylElement> group;
  for (const WeylElement& w : all_elements(rs))
    if (support(w).subset_of(group_support)) group.push_back(w);

  std::vector<std::pair<SimpleSubset, std::vector<RootVec>>> targets;
  for (std::uint32_t m = 0; m <= target_universe.mask; ++m) {
    if ((m & ~target_universe.mask) != 0) continue;
    SimpleSubset I{m};
    auto roots = positive_roots_of(rs, I);
    if (roots.size() != phi.size()) continue;
    std::sort(roots.begin(), roots.end());
    targets.emplace_back(I, std::move(roots));
  }

  Int max_len = group.empty() ? 0 : group.back().length();
  for (Int len = 0; len <= max_len; ++len)
    for (const auto& [I, roots] : targets)
      for (const WeylElement& x : group) {
        if (x.length() != len) continue;
        if (detail::maps_onto(x, phi, roots)) return Conjugation{x, I};
      }
  return std::nullopt;
}

}  // namespace detail

/// Find x in W with x(Phi_sub) = Phi_I^+ for some I of simple roots.
/// Among valid x the shortest wins, ties broken by the target subset
/// and then the reduced word.
inline Conjugation conjugate_to_simple(const RootSystem& rs, const std::vector<RootVec>& phi) {
  auto found = detail::conjugate_search(rs, phi, SimpleSubset::full(rs.rank()), SimpleSubset::full(rs.rank()));
  if (!found) throw std::domain_error("demsup: set is not Weyl-conjugate to a simple-spanned subsystem");
  return *found;
}

/// Same search restricted to x in W_I and targets J inside I.
inline Conjugation conjugate_to_simple_within(const RootSystem& rs, const SimpleSubset& I,
                                              const std::vector<RootVec>& phi) {
  auto found = detail::conjugate_search(rs, phi, I, I);
  if (!found) throw std::domain_error("demsup: set is not W_I-conjugate to a simple-spanned subsystem of I");
  return *found;
}

struct ModularProfile {
  WeightVec lambda;
  Int p = 0;
  std::vector<RootVec> phi;  // Phi_{lambda,p}
  bool regular = false;
  SimpleSubset j;  // J_lambda
  std::optional<Conjugation> conjugation;
};

inline ModularProfile modular_profile(const RootSystem& rs, const WeightVec& lambda, Int p) {
  ModularProfile out;
  out.lambda = lambda;
  out.p = p;
  out.phi = phi_lambda_p(rs, lambda, p);
  out.regular = out.phi.empty();
  out.j = j_lambda(rs, lambda);
  if (auto c = detail::conjugate_search(rs, out.phi, SimpleSubset::full(rs.rank()), SimpleSubset::full(rs.rank())))
    out.conjugation = *c;
  return out;
}

}  // namespace demsup
