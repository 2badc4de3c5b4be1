#pragma once

// Weyl group machinery for type A: elements in one-line permutation
// form, reduced words, Bruhat order via the subword property, supports
// S(v), parabolic long elements w_I and minimal coset representatives W^J.

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "demsup/rootsys.hpp"

namespace demsup {

/// A subset of the simple-root indices {1,...,rank}, stored as a bitmask.
struct SimpleSubset {
  std::uint32_t mask = 0;

  static SimpleSubset of(std::initializer_list<int> idx) {
    SimpleSubset s;
    for (int i : idx) s.mask |= 1u << (i - 1);
    return s;
  }
  static SimpleSubset full(int rank) { return SimpleSubset{(1u << rank) - 1u}; }

  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }
  bool subset_of(const SimpleSubset& o) const { return (mask & ~o.mask) == 0; }
  int size() const { return std::popcount(mask); }
  bool empty() const { return mask == 0; }

  std::vector<int> indices() const {
    std::vector<int> v;
    for (int i = 1; i <= 32; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }

  auto operator<=>(const SimpleSubset&) const = default;
};

inline std::string to_string(const SimpleSubset& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

/// Weyl group element of type A_rank, canonically a permutation of
/// {0,...,rank} in one-line notation.  Length is the inversion count.
class WeylElement {
 public:
  static WeylElement identity(int rank) {
    std::vector<int> p(rank + 1);
    for (int i = 0; i <= rank; ++i) p[i] = i;
    return WeylElement(std::move(p));
  }

  static WeylElement simple(int rank, int i) {
    if (i < 1 || i > rank) throw std::domain_error("demsup: simple index out of range: " + std::to_string(i));
    WeylElement w = identity(rank);
    std::swap(w.perm_[i - 1], w.perm_[i]);
    w.len_ = 1;
    return w;
  }

  static WeylElement from_permutation(std::vector<int> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int x : perm) {
      if (x < 0 || x >= static_cast<int>(perm.size()) || seen[x])
        throw std::invalid_argument("demsup: not a permutation");
      seen[x] = true;
    }
    return WeylElement(std::move(perm));
  }

  int rank() const { return static_cast<int>(perm_.size()) - 1; }
  Int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }
  const std::vector<int>& perm() const { return perm_; }

  /// Composition: (*this)(rhs(x)).
  WeylElement operator*(const WeylElement& rhs) const {
    check_same_rank(rhs);
    std::vector<int> p(perm_.size());
    for (std::size_t x = 0; x < p.size(); ++x) p[x] = perm_[rhs.perm_[x]];
    return WeylElement(std::move(p));
  }

  WeylElement inverse() const {
    std::vector<int> p(perm_.size());
    for (std::size_t x = 0; x < p.size(); ++x) p[perm_[x]] = static_cast<int>(x);
    return WeylElement(std::move(p));
  }

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator<(const WeylElement& o) const { return perm_ < o.perm_; }

  /// length(s_i * w) < length(w)
  bool has_left_descent(int i) const {
    // s_i w swaps the values i-1 and i in the one-line form; it shortens
    // w exactly when i appears before i-1.
    int pos_lo = -1, pos_hi = -1;
    for (std::size_t x = 0; x < perm_.size(); ++x) {
      if (perm_[x] == i - 1) pos_lo = static_cast<int>(x);
      if (perm_[x] == i) pos_hi = static_cast<int>(x);
    }
    return pos_hi < pos_lo;
  }

  /// length(w * s_i) < length(w)
  bool has_right_descent(int i) const { return perm_[i - 1] > perm_[i]; }

 private:
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
    len_ = 0;
    for (std::size_t i = 0; i < perm_.size(); ++i)
      for (std::size_t j = i + 1; j < perm_.size(); ++j)
        if (perm_[i] > perm_[j]) ++len_;
  }

  void check_same_rank(const WeylElement& o) const {
    if (perm_.size() != o.perm_.size()) throw std::invalid_argument("demsup: Weyl rank mismatch");
  }

  friend WeylElement from_word(int rank, const std::vector<int>& word);

  std::vector<int> perm_;
  Int len_ = 0;
};

inline WeylElement from_word(int rank, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rank);
  for (int i : word) w = w * WeylElement::simple(rank, i);
  return w;
}

/// Lexicographically least reduced word, produced by repeatedly
/// stripping the smallest left descent.
inline std::vector<int> reduced_word(const WeylElement& w) {
  std::vector<int> word;
  WeylElement rest = w;
  while (!rest.is_identity()) {
    for (int i = 1; i <= rest.rank(); ++i)
      if (rest.has_left_descent(i)) {
        word.push_back(i);
        rest = WeylElement::simple(rest.rank(), i) * rest;
        break;
      }
  }
  return word;
}

/// All reduced words, in lexicographic order.
inline std::vector<std::vector<int>> all_reduced_words(const WeylElement& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= w.rank(); ++i) {
    if (!w.has_left_descent(i)) continue;
    for (auto& tail : all_reduced_words(WeylElement::simple(w.rank(), i) * w)) {
      std::vector<int> word{i};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

/// The whole group, sorted by (length, lex-least reduced word).
inline std::vector<WeylElement> all_elements(const RootSystem& rs) {
  std::vector<int> p(rs.rank() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
  std::vector<WeylElement> out;
  do {
    out.push_back(WeylElement::from_permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    return std::pair(a.length(), reduced_word(a)) < std::pair(b.length(), reduced_word(b));
  });
  return out;
}

/// u <= v iff the lex-least reduced word of v contains a reduced word
/// of u as a subword.
inline bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("demsup: Weyl rank mismatch");
  if (u.length() > v.length()) return false;
  if (u.length() == v.length()) return u == v;
  const std::vector<int> word = reduced_word(v);
  const int n = static_cast<int>(word.size());
  const int k = static_cast<int>(u.length());
  for (std::uint32_t sel = 0; sel < (1u << n); ++sel) {
    if (std::popcount(sel) != k) continue;
    WeylElement prod = WeylElement::identity(u.rank());
    for (int j = 0; j < n; ++j)
      if ((sel >> j) & 1u) prod = prod * WeylElement::simple(u.rank(), word[j]);
    if (prod == u) return true;
  }
  return false;
}

/// u <= v in the left weak order: v = xu with lengths adding.  These are
/// exactly the pairs reachable by repeatedly extending a reduced word on
/// the left.
inline bool weak_left_leq(const WeylElement& u, const WeylElement& v) {
  return (v * u.inverse()).length() + u.length() == v.length();
}

/// S(v): the set of simple indices appearing in a reduced word of v
/// (independent of the word chosen).
inline SimpleSubset support(const WeylElement& v) {
  SimpleSubset s;
  for (int i : reduced_word(v)) s.mask |= 1u << (i - 1);
  return s;
}

/// Longest element w_I of the parabolic subgroup W_I.
inline WeylElement long_element(int rank, const SimpleSubset& I) {
  WeylElement w = WeylElement::identity(rank);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : I.indices()) {
      WeylElement next = w * WeylElement::simple(rank, i);
      if (next.length() > w.length()) {
        w = next;
        grew = true;
      }
    }
  }
  return w;
}

/// Minimal-length coset representatives W^J for W/W_J: the elements
/// with no right descent in J.
inline std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const SimpleSubset& J) {
  std::vector<WeylElement> out;
  for (const WeylElement& w : all_elements(rs)) {
    bool minimal = true;
    for (int j : J.indices())
      if (w.has_right_descent(j)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(w);
  }
  return out;
}

/// w_{0,J}: the unique longest member of W^J.
inline WeylElement longest_coset_rep(const RootSystem& rs, const SimpleSubset& J) {
  const auto reps = min_coset_reps(rs, J);
  const WeylElement* best = &reps.front();
  for (const WeylElement& w : reps)
    if (w.length() > best->length()) best = &w;
  return *best;
}

struct ParabolicBoundSet {
  std::vector<SimpleSubset> all;      // every I with w_I <= v, by ascending mask
  std::vector<SimpleSubset> maximal;  // the bounds of maximal length
};

/// All parabolic lower bounds w_I <= v.  The flagged maximal bounds are
/// those of greatest length; equal-length bounds are Bruhat-incomparable,
/// so the flagged set is an antichain.
inline ParabolicBoundSet parabolic_lower_bounds(const WeylElement& v) {
  ParabolicBoundSet out;
  Int best = -1;
  for (std::uint32_t m = 0; m < (1u << v.rank()); ++m) {
    SimpleSubset I{m};
    WeylElement wI = long_element(v.rank(), I);
    if (!bruhat_leq(wI, v)) continue;
    out.all.push_back(I);
    best = std::max(best, wI.length());
  }
  for (const SimpleSubset& I : out.all)
    if (long_element(v.rank(), I).length() == best) out.maximal.push_back(I);
  return out;
}

/// w acting on a root.  Type A: convert to coordinates on the epsilon
/// basis of the ambient permutation space, permute, convert back.
inline RootVec act_on_root(const WeylElement& w, const RootVec& alpha) {
  const int rank = w.rank();
  if (static_cast<int>(alpha.coeffs.size()) != rank) throw std::invalid_argument("demsup: rank mismatch in act_on_root");
  std::vector<Int> eps(rank + 1, 0);
  eps[0] = alpha.coeffs[0];
  for (int i = 1; i < rank; ++i) eps[i] = alpha.coeffs[i] - alpha.coeffs[i - 1];
  eps[rank] = -alpha.coeffs[rank - 1];
  const WeylElement winv = w.inverse();
  std::vector<Int> moved(rank + 1);
  for (int j = 0; j <= rank; ++j) moved[j] = eps[winv.perm()[j]];
  RootVec out{std::vector<Int>(rank, 0)};
  Int run = 0;
  for (int k = 0; k < rank; ++k) {
    run += moved[k];
    out.coeffs[k] = run;
  }
  return out;
}

// --- word serialization: "1 2 1", identity as "e" ---

inline std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

inline std::string to_string(const WeylElement& w) { return word_to_string(reduced_word(w)); }

inline std::vector<int> parse_word(const std::string& text, int rank) {
  std::string t = text;
  if (t == "e" || t.empty()) return {};
  std::istringstream in(t);
  std::vector<int> word;
  int i;
  while (in >> i) {
    if (i < 1 || i > rank)
      throw std::domain_error("demsup: word index " + std::to_string(i) + " out of range 1.." + std::to_string(rank));
    word.push_back(i);
  }
  if (!in.eof()) throw std::domain_error("demsup: cannot parse Weyl word '" + text + "'");
  return word;
}

}  // namespace demsup
