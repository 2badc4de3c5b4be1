#pragma once

// Root-system combinatorics for simply-laced types of small rank:
// Cartan data, positive roots, the Weyl-invariant pairing, rho and
// simple reflections.  Weights are stored in the fundamental-weight
// basis, roots in the simple-root basis; the two meet only through
// the Cartan matrix.

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "demsup/arith.hpp"

namespace demsup {

/// A root written in the simple-root basis.
struct RootVec {
  std::vector<Int> coeffs;

  auto operator<=>(const RootVec&) const = default;

  Int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), Int{0}); }

  bool is_positive() const {
    bool nonzero = false;
    for (Int c : coeffs) {
      if (c < 0) return false;
      if (c != 0) nonzero = true;
    }
    return nonzero;
  }

  bool is_negative() const {
    RootVec neg = *this;
    for (Int& c : neg.coeffs) c = -c;
    return neg.is_positive();
  }

  RootVec negated() const {
    RootVec r = *this;
    for (Int& c : r.coeffs) c = -c;
    return r;
  }
};

/// A weight written in the fundamental-weight basis, i.e.
/// coords[i-1] = <lambda, alpha_i^vee>.
struct WeightVec {
  std::vector<Int> coords;

  auto operator<=>(const WeightVec&) const = default;

  bool is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c >= 0; });
  }
};

inline WeightVec operator+(const WeightVec& a, const WeightVec& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("demsup: weight rank mismatch");
  WeightVec r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked_add(r.coords[i], b.coords[i]);
  return r;
}

inline WeightVec operator-(const WeightVec& a, const WeightVec& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("demsup: weight rank mismatch");
  WeightVec r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked_sub(r.coords[i], b.coords[i]);
  return r;
}

class RootSystem {
 public:
  RootSystem(char type_letter, int rank) : type_(type_letter), rank_(rank) {
    if (type_ != 'A') throw std::invalid_argument("demsup: unsupported Dynkin type " + std::string(1, type_));
    if (rank_ < 1 || rank_ > 4) throw std::invalid_argument("demsup: rank must be in 1..4, got " + std::to_string(rank_));
    cartan_.assign(rank_, std::vector<Int>(rank_, 0));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        cartan_[i][j] = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    generate_roots();
  }

  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  /// Cartan matrix entry <alpha_j, alpha_i^vee>, indices 1-based.
  Int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }

  const std::vector<RootVec>& positive_roots() const { return positive_roots_; }

  Int coxeter_number() const { return coxeter_number_; }

  RootVec simple_root(int i) const {
    check_index(i);
    RootVec r{std::vector<Int>(rank_, 0)};
    r.coeffs[i - 1] = 1;
    return r;
  }

  /// alpha_i expressed in fundamental-weight coordinates (a Cartan column).
  WeightVec simple_root_as_weight(int i) const {
    check_index(i);
    WeightVec w{std::vector<Int>(rank_, 0)};
    for (int j = 0; j < rank_; ++j) w.coords[j] = cartan_[j][i - 1];
    return w;
  }

  WeightVec rho() const { return WeightVec{std::vector<Int>(rank_, 1)}; }

  WeightVec zero_weight() const { return WeightVec{std::vector<Int>(rank_, 0)}; }

  bool is_root(const RootVec& alpha) const {
    if (static_cast<int>(alpha.coeffs.size()) != rank_) return false;
    if (alpha.is_positive()) return root_set_.count(alpha.coeffs) > 0;
    if (alpha.is_negative()) return root_set_.count(alpha.negated().coeffs) > 0;
    return false;
  }

  /// <lambda, alpha^vee>.  Simply laced, so the coroot of
  /// alpha = sum c_i alpha_i is sum c_i alpha_i^vee and the pairing is an
  /// integer dot product against the fundamental coordinates of lambda.
  Int pairing(const WeightVec& lambda, const RootVec& alpha) const {
    if (!is_root(alpha)) throw std::domain_error("demsup: pairing called with a non-root");
    Int s = 0;
    for (int i = 0; i < rank_; ++i) s = checked_add(s, checked_mul(lambda.coords[i], alpha.coeffs[i]));
    return s;
  }

  /// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
  WeightVec reflect_weight(const WeightVec& lambda, int i) const {
    check_index(i);
    const Int m = lambda.coords[i - 1];
    WeightVec r = lambda;
    for (int j = 0; j < rank_; ++j) r.coords[j] = checked_sub(r.coords[j], checked_mul(m, cartan_[j][i - 1]));
    return r;
  }

  /// s_i(gamma) = gamma - <gamma, alpha_i^vee> alpha_i, in root coordinates.
  RootVec reflect_root(const RootVec& gamma, int i) const {
    check_index(i);
    Int m = 0;
    for (int j = 0; j < rank_; ++j) m = checked_add(m, checked_mul(cartan_[i - 1][j], gamma.coeffs[j]));
    RootVec r = gamma;
    r.coeffs[i - 1] = checked_sub(r.coeffs[i - 1], m);
    return r;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > rank_) throw std::domain_error("demsup: simple index out of range: " + std::to_string(i));
  }

  // Close the simple roots under all simple reflections; the positive
  // half of the resulting set is Phi+.
  void generate_roots() {
    std::set<std::vector<Int>> all;
    std::vector<RootVec> frontier;
    for (int i = 1; i <= rank_; ++i) {
      frontier.push_back(simple_root(i));
      all.insert(frontier.back().coeffs);
    }
    while (!frontier.empty()) {
      std::vector<RootVec> next;
      for (const RootVec& r : frontier)
        for (int i = 1; i <= rank_; ++i) {
          RootVec s = reflect_root(r, i);
          if (all.insert(s.coeffs).second) next.push_back(s);
        }
      frontier = std::move(next);
    }
    for (const auto& c : all) {
      RootVec r{c};
      if (r.is_positive()) positive_roots_.push_back(r);
    }
    std::sort(positive_roots_.begin(), positive_roots_.end(),
              [](const RootVec& a, const RootVec& b) {
                return std::pair(a.height(), a.coeffs) < std::pair(b.height(), b.coeffs);
              });
    for (const RootVec& r : positive_roots_) root_set_.insert(r.coeffs);
    coxeter_number_ = positive_roots_.back().height() + 1;
  }

  char type_;
  int rank_;
  std::vector<std::vector<Int>> cartan_;
  std::vector<RootVec> positive_roots_;
  std::set<std::vector<Int>> root_set_;
  Int coxeter_number_ = 0;
};

inline RootSystem build_root_system(char type_letter, int rank) { return RootSystem(type_letter, rank); }

}  // namespace demsup
