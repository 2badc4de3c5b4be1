#pragma once

// Support-variety classification for Demazure modules over the first
// Frobenius kernel of a Borel subgroup.
//
// Rank 1 and rank 2 are classified completely by a closed lattice of
// B-stable labels; higher ranks get symbolic answers in the settled
// cases (p-regular weights, w = w_{0,J_lambda}, w = w_I) and Bruhat
// bound sandwiches otherwise.

#include <variant>

#include "demsup/charring.hpp"
#include "demsup/modweights.hpp"

namespace demsup {

/// The B-stable irreducible subvarieties of the rank-2 nilradical
/// u = kX_a + kX_b + kX_{a+b}, plus the union u_a | u_b that the
/// classification produces.  Here u_a = kX_a + kX_{a+b} is the closure
/// of B.X_a, and likewise u_b.
enum class A2Label { Zero, LineHigh, Ua, Ub, UaUb, FullU };

/// Inclusion order of the labels.  Ua and Ub are incomparable.
inline bool label_leq(A2Label x, A2Label y) {
  if (x == y) return true;
  switch (x) {
    case A2Label::Zero: return true;
    case A2Label::LineHigh: return y != A2Label::Zero;
    case A2Label::Ua:
    case A2Label::Ub: return y == A2Label::UaUb || y == A2Label::FullU;
    case A2Label::UaUb: return y == A2Label::FullU;
    case A2Label::FullU: return false;
  }
  return false;
}

inline A2Label swap_ab(A2Label x) {
  if (x == A2Label::Ua) return A2Label::Ub;
  if (x == A2Label::Ub) return A2Label::Ua;
  return x;
}

inline std::string to_string(A2Label x) {
  switch (x) {
    case A2Label::Zero: return "0";
    case A2Label::LineHigh: return "line[a+b]";
    case A2Label::Ua: return "u_a";
    case A2Label::Ub: return "u_b";
    case A2Label::UaUb: return "u_a|u_b";
    case A2Label::FullU: return "u";
  }
  return "?";
}

// Symbolic values for ranks where no complete classification is known.
struct GSatIntersect {
  SimpleSubset I;  // (G.u_I) intersect N1(u)
  bool operator==(const GSatIntersect&) const = default;
};
struct LeviSatIntersect {
  SimpleSubset I, J;  // (L_I.u_J) intersect N1(p_I) -- a (P_I)_1 support
  bool operator==(const LeviSatIntersect&) const = default;
};
struct FullNullcone {
  bool operator==(const FullNullcone&) const = default;
};

using VarietyExpr = std::variant<A2Label, GSatIntersect, LeviSatIntersect, FullNullcone>;

inline std::string to_string(const VarietyExpr& v) {
  if (const auto* c = std::get_if<A2Label>(&v)) return to_string(*c);
  if (const auto* g = std::get_if<GSatIntersect>(&v)) return "GSat(I=" + to_string(g->I) + ")∩N1(u)";
  if (const auto* l = std::get_if<LeviSatIntersect>(&v))
    return "LSat(I=" + to_string(l->I) + ",J=" + to_string(l->J) + ")∩N1(p_I)";
  return "N1(u)";
}

/// G-saturated orbit-closure classes in rank <= 2: zero, the minimal
/// nilpotent orbit closure, the full nilpotent cone.
enum class OrbitClass { ZeroOrbit = 0, MinOrbitClosure = 1, NilCone = 2 };

inline bool orbit_leq(OrbitClass a, OrbitClass b) { return static_cast<int>(a) <= static_cast<int>(b); }
inline OrbitClass orbit_meet(OrbitClass a, OrbitClass b) { return orbit_leq(a, b) ? a : b; }

inline std::string to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::ZeroOrbit: return "0";
    case OrbitClass::MinOrbitClosure: return "Omin";
    case OrbitClass::NilCone: return "N";
  }
  return "?";
}

struct SymbolicGU {
  SimpleSubset I;
  bool operator==(const SymbolicGU&) const = default;
};

using OrbitLabel = std::variant<OrbitClass, SymbolicGU>;

inline std::string to_string(const OrbitLabel& o) {
  if (const auto* c = std::get_if<OrbitClass>(&o)) return to_string(*c);
  return "G.u(I=" + to_string(std::get<SymbolicGU>(o).I) + ")";
}

/// N1(u), the restricted nullcone of the nilradical.  Rank 1: all of u
/// for every p.  Rank 2: all of u when p >= 3, and u_a | u_b when p = 2
/// (squares of elements with both simple coordinates nonzero survive).
inline VarietyExpr restricted_nullcone_u(const RootSystem& rs, Int p) {
  require_prime(p);
  if (rs.rank() == 1) return A2Label::FullU;
  if (rs.rank() == 2) return p >= 3 ? A2Label::FullU : A2Label::UaUb;
  return FullNullcone{};
}

inline A2Label restricted_nullcone_label(const RootSystem& rs, Int p) {
  return std::get<A2Label>(restricted_nullcone_u(rs, p));
}

/// Smallest B-stable label containing v = aX_a + bX_b + cX_{a+b}; the
/// flags record which coefficients are nonzero.
inline A2Label b_stable_closure(bool a_nonzero, bool b_nonzero, bool c_nonzero) {
  if (a_nonzero && b_nonzero) return A2Label::FullU;  // dense B-orbit
  if (a_nonzero) return A2Label::Ua;
  if (b_nonzero) return A2Label::Ub;
  if (c_nonzero) return A2Label::LineHigh;
  return A2Label::Zero;
}

struct ClassifiedSupport {
  A2Label label;
  std::string branch;  // which rule fired, for reporting
};

/// Rank-1 classification: the one-point Schubert cell gives all of u;
/// the full flag variety gives u unless p divides lambda + 1, where the
/// support collapses to zero.
inline ClassifiedSupport classify_a1(const RootSystem& rs, const WeylElement& w, const WeightVec& lambda, Int p) {
  if (rs.rank() != 1) throw std::domain_error("demsup: classify_a1 needs rank 1");
  require_prime(p);
  if (!lambda.is_dominant()) throw std::domain_error("demsup: dominant weight required");
  if (w.is_identity()) return {A2Label::FullU, "w = e: one-dimensional module, full restricted nullcone"};
  const Int l = lambda.coords[0];
  if (divides(p, l + 1)) return {A2Label::Zero, "w = s: p | lambda+1"};
  return {A2Label::FullU, "w = s: p !| lambda+1 (p-regular)"};
}

namespace detail {

// The two full-support conditions for length-2 elements when p >= 3:
// p-regularity of lambda, and p not dividing dim H^0(s_a s_b, lambda).
inline bool regular_condition(Int l1, Int l2, Int p) {
  return !divides(p, l1 + 1) && !divides(p, l2 + 1) && !divides(p, l1 + l2 + 2);
}
inline bool dimension_condition(Int l1, Int l2, Int p) {
  return !divides(p, l2 + 1) && !divides(p, 2 * l1 + l2 + 2);
}

inline ClassifiedSupport classify_length_two(Int l1, Int l2, Int p) {
  if (p == 2) {
    if (l2 == 0) {
      if (l1 % 2 == 1) return {A2Label::Ua, "lambda = (2n-1, 0)"};
      return {A2Label::UaUb, "lambda = (2n, 0)"};
    }
    return {A2Label::UaUb, "lambda2 != 0"};
  }
  if (regular_condition(l1, l2, p)) return {A2Label::FullU, "p-regular weight"};
  if (dimension_condition(l1, l2, p)) return {A2Label::FullU, "p !| dim, full support"};
  if (l2 == 0) {
    // With both conditions failing and l2 = 0, p | l1 + 1 is forced;
    // anything else means the case split above is broken.
    if (!divides(p, l1 + 1)) throw std::logic_error("demsup: length-2 case split not exhaustive");
    return {A2Label::Ua, "lambda = (np-1, 0)"};
  }
  return {A2Label::UaUb, "lambda2 != 0, proper support"};
}

inline ClassifiedSupport resolve_w0_row(const RootSystem& rs, const WeightVec& lambda, Int p) {
  const Conjugation conj = conjugate_to_simple(rs, phi_lambda_p(rs, lambda, p));
  switch (conj.target.size()) {
    case 0: return {restricted_nullcone_label(rs, p), "w = w0: Phi(lambda,p) empty, full restricted nullcone"};
    case 1: return {A2Label::UaUb, "w = w0: |I| = 1, minimal orbit meets u in rank <= 1 locus"};
    default: return {A2Label::Zero, "w = w0: I = {1,2}, projective module"};
  }
}

}  // namespace detail

/// Total rank-2 classification over all six Weyl group elements.
inline ClassifiedSupport classify_a2(const RootSystem& rs, const WeylElement& w, const WeightVec& lambda, Int p) {
  if (rs.rank() != 2) throw std::domain_error("demsup: classify_a2 needs rank 2");
  require_prime(p);
  if (!lambda.is_dominant()) throw std::domain_error("demsup: dominant weight required");
  const Int l1 = lambda.coords[0], l2 = lambda.coords[1];

  switch (w.length()) {
    case 0:
      return {restricted_nullcone_label(rs, p), "w = e: one-dimensional module, full restricted nullcone"};
    case 1: {
      const int i = reduced_word(w)[0];
      const Int li = (i == 1) ? l1 : l2;
      const char* name = (i == 1) ? "a" : "b";
      if (divides(p, li + 1))
        return {i == 1 ? A2Label::Ua : A2Label::Ub,
                std::string("w = s_") + name + ": p | lambda" + std::to_string(i) + "+1"};
      return {restricted_nullcone_label(rs, p),
              std::string("w = s_") + name + ": p !| lambda" + std::to_string(i) + "+1, full restricted nullcone"};
    }
    case 2: {
      const bool mirrored = (reduced_word(w) == std::vector<int>{2, 1});
      ClassifiedSupport res =
          mirrored ? detail::classify_length_two(l2, l1, p) : detail::classify_length_two(l1, l2, p);
      if (mirrored) {
        res.label = swap_ab(res.label);
        res.branch = "w = s_b s_a (mirrored): " + res.branch;
      } else {
        res.branch = "w = s_a s_b: " + res.branch;
      }
      return res;
    }
    default:
      return detail::resolve_w0_row(rs, lambda, p);
  }
}

inline VarietyExpr support_a1(const RootSystem& rs, const WeylElement& w, const WeightVec& lambda, Int p) {
  return classify_a1(rs, w, lambda, p).label;
}

inline VarietyExpr support_a2(const RootSystem& rs, const WeylElement& w, const WeightVec& lambda, Int p) {
  return classify_a2(rs, w, lambda, p).label;
}

inline A2Label support_label(const RootSystem& rs, const WeylElement& w, const WeightVec& lambda, Int p) {
  return rs.rank() == 1 ? classify_a1(rs, w, lambda, p).label : classify_a2(rs, w, lambda, p).label;
}

/// Support at w = w_{0,J_lambda}: the G-saturated nilradical of the
/// parabolic attached to the conjugated Phi_{lambda,p}, intersected with
/// the restricted nullcone.  Concrete in rank <= 2, symbolic above.
inline VarietyExpr support_w0J_symbolic(const RootSystem& rs, const WeightVec& lambda, Int p) {
  if (!lambda.is_dominant()) throw std::domain_error("demsup: dominant weight required");
  require_prime(p);
  const Conjugation conj = conjugate_to_simple(rs, phi_lambda_p(rs, lambda, p));
  if (rs.rank() > 2) return GSatIntersect{conj.target};
  const int k = conj.target.size();
  if (k == 0) return restricted_nullcone_u(rs, p);
  if (k < rs.rank()) return A2Label::UaUb;  // only reachable in rank 2
  return A2Label::Zero;
}

/// Support of H^0(w_I, lambda) as a (P_I)_1-variety: the Levi-saturated
/// nilradical L_I.u_J intersected with N1(p_I), J obtained by conjugating
/// (Phi_I)_{lambda,p} inside W_I.
inline VarietyExpr support_wI_symbolic(const RootSystem& rs, const SimpleSubset& I, const WeightVec& lambda, Int p) {
  if (!lambda.is_dominant()) throw std::domain_error("demsup: dominant weight required");
  require_prime(p);
  std::vector<RootVec> phi_I;
  for (const RootVec& alpha : phi_lambda_p(rs, lambda, p)) {
    bool inside = true;
    for (int i = 1; i <= rs.rank(); ++i)
      if (alpha.coeffs[i - 1] != 0 && !I.contains(i)) inside = false;
    if (inside) phi_I.push_back(alpha);
  }
  const Conjugation conj = conjugate_to_simple_within(rs, I, phi_I);
  return LeviSatIntersect{I, conj.target};
}

/// G-saturation.  Everything strictly between zero and u sweeps out the
/// minimal orbit closure; u itself sweeps out the nilpotent cone.
inline OrbitClass g_saturate(A2Label x) {
  if (x == A2Label::Zero) return OrbitClass::ZeroOrbit;
  if (x == A2Label::FullU) return OrbitClass::NilCone;
  return OrbitClass::MinOrbitClosure;
}

inline OrbitLabel g_saturate(const VarietyExpr& v) {
  if (const auto* c = std::get_if<A2Label>(&v)) return g_saturate(*c);
  if (const auto* g = std::get_if<GSatIntersect>(&v)) return SymbolicGU{g->I};
  if (const auto* l = std::get_if<LeviSatIntersect>(&v)) return SymbolicGU{l->J};
  return SymbolicGU{SimpleSubset{}};
}

namespace detail {

template <typename Leq>
bool saturation_monotone_under(const RootSystem& rs, Int p, const WeightVec& lambda, Leq leq) {
  if (rs.rank() > 2) throw std::domain_error("demsup: saturation check needs rank <= 2");
  const auto elems = all_elements(rs);
  std::vector<OrbitClass> sat;
  sat.reserve(elems.size());
  for (const WeylElement& w : elems) sat.push_back(g_saturate(support_label(rs, w, lambda, p)));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j || !leq(elems[i], elems[j])) continue;
      if (!orbit_leq(sat[j], sat[i])) return false;
    }
  return true;
}

}  // namespace detail

/// Whether the saturated support at w2 sits inside the saturated support
/// at w1 for every Bruhat-comparable pair w1 < w2.  This fails on a
/// narrow singular family in rank 2 (one wall singular, the flipped
/// dimension condition prime to p, e.g. lambda = (p-1, 1) at the pair
/// s_a < s_a s_b); the weak-order check below has no exceptions.
inline bool check_saturation_monotone(const RootSystem& rs, Int p, const WeightVec& lambda) {
  return detail::saturation_monotone_under(rs, p, lambda,
                                           [](const WeylElement& u, const WeylElement& v) { return bruhat_leq(u, v); });
}

/// Same inclusion restricted to left-weak-order pairs, i.e. the chains
/// along which H^0(s_c w, lambda) is induced from H^0(w, lambda).
inline bool check_saturation_monotone_weak(const RootSystem& rs, Int p, const WeightVec& lambda) {
  return detail::saturation_monotone_under(
      rs, p, lambda, [](const WeylElement& u, const WeylElement& v) { return weak_left_leq(u, v); });
}

struct ParabolicBounds {
  OrbitClass lower;               // saturated support at w_{S(v)}
  OrbitClass upper;               // meet over saturated supports at all w_I <= v
  SimpleSubset support_set;       // S(v)
  std::vector<SimpleSubset> meet_terms;
};

/// The sandwich  G.V(w_{S(v)})  <=  G.V(v)  <=  meet over w_I <= v.
inline ParabolicBounds parabolic_bounds(const RootSystem& rs, const WeylElement& v, const WeightVec& lambda, Int p) {
  if (rs.rank() > 2) throw std::domain_error("demsup: concrete bounds need rank <= 2; see symbolic_bounds");
  ParabolicBounds out;
  out.support_set = support(v);
  out.lower = g_saturate(support_label(rs, long_element(rs.rank(), out.support_set), lambda, p));
  out.upper = OrbitClass::NilCone;
  out.meet_terms = parabolic_lower_bounds(v).all;
  for (const SimpleSubset& I : out.meet_terms)
    out.upper = orbit_meet(out.upper, g_saturate(support_label(rs, long_element(rs.rank(), I), lambda, p)));
  return out;
}

struct SymbolicBounds {
  SimpleSubset support_set;  // S(v)
  VarietyExpr lower;         // value at w_{S(v)}, as a (P_I)_1 support
  std::vector<std::pair<SimpleSubset, VarietyExpr>> upper_terms;  // at maximal w_I <= v
};

/// General-rank bound sandwich, left in symbolic form.
inline SymbolicBounds symbolic_bounds(const RootSystem& rs, const WeylElement& v, const WeightVec& lambda, Int p) {
  SymbolicBounds out;
  out.support_set = support(v);
  out.lower = support_wI_symbolic(rs, out.support_set, lambda, p);
  for (const SimpleSubset& I : parabolic_lower_bounds(v).maximal)
    out.upper_terms.emplace_back(I, support_wI_symbolic(rs, I, lambda, p));
  return out;
}

}  // namespace demsup
