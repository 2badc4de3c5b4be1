#pragma once

// Exhaustive property sweeps backing the CLI `check` subcommand.

#include "demsup/supports.hpp"

namespace demsup {

struct CheckOutcome {
  bool ok = true;
  std::uint64_t cases = 0;
  std::string counterexample;  // empty when ok

  void fail(std::string witness) {
    if (ok) counterexample = std::move(witness);
    ok = false;
  }
};

namespace detail {

inline std::vector<WeightVec> weight_grid(int rank, Int lmax) {
  std::vector<WeightVec> grid;
  if (rank == 1) {
    for (Int l = 0; l <= lmax; ++l) grid.push_back(WeightVec{{l}});
  } else {
    for (Int l1 = 0; l1 <= lmax; ++l1)
      for (Int l2 = 0; l2 <= lmax; ++l2) grid.push_back(WeightVec{{l1, l2}});
  }
  return grid;
}

}  // namespace detail

/// Saturated supports shrink along the Bruhat order, for every dominant
/// weight with entries <= lmax and every listed prime.
inline CheckOutcome check_saturation(const RootSystem& rs, Int lmax, const std::vector<Int>& primes) {
  CheckOutcome out;
  for (Int p : primes)
    for (const WeightVec& lambda : detail::weight_grid(rs.rank(), lmax)) {
      ++out.cases;
      if (!check_saturation_monotone(rs, p, lambda))
        out.fail("p=" + std::to_string(p) + " lambda=(" + std::to_string(lambda.coords[0]) +
                 (rs.rank() == 2 ? "," + std::to_string(lambda.coords[1]) : "") + ")");
    }
  return out;
}

/// The weak-order form of the same inclusion.
inline CheckOutcome check_saturation_weak(const RootSystem& rs, Int lmax, const std::vector<Int>& primes) {
  CheckOutcome out;
  for (Int p : primes)
    for (const WeightVec& lambda : detail::weight_grid(rs.rank(), lmax)) {
      ++out.cases;
      if (!check_saturation_monotone_weak(rs, p, lambda))
        out.fail("p=" + std::to_string(p) + " lambda=(" + std::to_string(lambda.coords[0]) +
                 (rs.rank() == 2 ? "," + std::to_string(lambda.coords[1]) : "") + ")");
    }
  return out;
}

/// v <= w_{S(v)} for every v; and v <= w_I forces S(v) inside I together
/// with w_{S(v)} <= w_I.
inline CheckOutcome check_parabolic_closure_law(const RootSystem& rs) {
  CheckOutcome out;
  const auto elems = all_elements(rs);
  for (const WeylElement& v : elems) {
    ++out.cases;
    const SimpleSubset S = support(v);
    if (!bruhat_leq(v, long_element(rs.rank(), S))) out.fail("v=" + to_string(v) + " not below w_S(v)");
    for (std::uint32_t m = 0; m < (1u << rs.rank()); ++m) {
      SimpleSubset I{m};
      const WeylElement wI = long_element(rs.rank(), I);
      if (!bruhat_leq(v, wI)) continue;
      ++out.cases;
      if (!S.subset_of(I) || !bruhat_leq(long_element(rs.rank(), S), wI))
        out.fail("v=" + to_string(v) + " I=" + to_string(I));
    }
  }
  return out;
}

/// The Demazure operator recursion agrees with the rank-2 closed form
/// for the length-2 element, and with the Weyl dimension formula at w0.
inline CheckOutcome check_dimension(Int lmax) {
  CheckOutcome out;
  const RootSystem rs('A', 2);
  const WeylElement sab = from_word(2, {1, 2});
  const WeylElement w0 = from_word(2, {1, 2, 1});
  for (Int l1 = 0; l1 <= lmax; ++l1)
    for (Int l2 = 0; l2 <= lmax; ++l2) {
      ++out.cases;
      const WeightVec lambda{{l1, l2}};
      const Int by_operator = dimension(demazure_character(rs, sab, lambda));
      if (by_operator != a2_demazure_dim_formula(lambda))
        out.fail("length-2 dim mismatch at lambda=(" + std::to_string(l1) + "," + std::to_string(l2) + ")");
      const Int weyl = (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) / 2;
      if (dimension(demazure_character(rs, w0, lambda)) != weyl)
        out.fail("w0 dim mismatch at lambda=(" + std::to_string(l1) + "," + std::to_string(l2) + ")");
    }
  return out;
}

/// Demazure characters do not depend on the reduced word chosen.
inline CheckOutcome check_word_independence(Int lmax) {
  CheckOutcome out;
  const RootSystem rs('A', 2);
  for (const WeylElement& w : all_elements(rs)) {
    const auto words = all_reduced_words(w);
    for (Int l1 = 0; l1 <= lmax; ++l1)
      for (Int l2 = 0; l2 <= lmax; ++l2) {
        ++out.cases;
        const WeightVec lambda{{l1, l2}};
        const Character canonical = demazure_character(rs, w, lambda);
        for (const auto& word : words) {
          Character f = Character::monomial(lambda);
          for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_step(rs, f, *it);
          if (!(f == canonical))
            out.fail("w=" + to_string(w) + " word=" + word_to_string(word) + " lambda=(" + std::to_string(l1) +
                     "," + std::to_string(l2) + ")");
        }
      }
  }
  return out;
}

}  // namespace demsup
