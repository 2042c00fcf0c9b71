#pragma once

// Finite-support permutations of the positive integers (elements of S_inf),
// in cycle notation, with the action on monomials.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symideal/error.hpp"
#include "symideal/monomial.hpp"

namespace symideal {

/// A bijection of {1, 2, ...} that is the identity outside a finite support.
/// Only moved points are stored, so equal permutations compare equal.
class Permutation {
 public:
  Permutation() = default;

  /// From an arbitrary finite map; fixed points are dropped. Throws unless the
  /// map is a bijection of its domain onto itself.
  explicit Permutation(const std::map<index_type, index_type>& images) {
    std::set<index_type> domain;
    std::set<index_type> image;
    for (auto [from, to] : images) {
      if (from == 0 || to == 0) throw std::invalid_argument("permutations act on positive integers");
      domain.insert(from);
      if (!image.insert(to).second) throw std::invalid_argument("permutation map is not injective");
    }
    if (domain != image) throw std::invalid_argument("permutation map does not close on its domain");
    for (auto [from, to] : images) {
      if (from != to) forward_.emplace(from, to);
    }
  }

  static Permutation identity() { return {}; }

  /// One-line notation: images[k] is the image of k + 1.
  static Permutation from_one_line(const std::vector<index_type>& images) {
    std::map<index_type, index_type> m;
    for (std::size_t k = 0; k < images.size(); ++k) m.emplace(static_cast<index_type>(k + 1), images[k]);
    return Permutation(m);
  }

  static Permutation transposition(index_type a, index_type b) {
    if (a == b) return {};
    return Permutation({{a, b}, {b, a}});
  }

  /// A single cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0.
  static Permutation cycle(const std::vector<index_type>& points) {
    std::map<index_type, index_type> m;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (!m.emplace(points[k], points[(k + 1) % points.size()]).second) {
        throw parse_error("repeated point in a cycle");
      }
    }
    return Permutation(m);
  }

  index_type operator()(index_type i) const {
    auto it = forward_.find(i);
    return it == forward_.end() ? i : it->second;
  }

  /// Moved points plus their images.
  const std::map<index_type, index_type>& moved() const noexcept { return forward_; }

  std::vector<index_type> support() const {
    std::vector<index_type> s;
    s.reserve(forward_.size());
    for (auto [from, to] : forward_) s.push_back(from);
    return s;
  }

  bool is_identity() const noexcept { return forward_.empty(); }
  index_type max_moved() const noexcept { return forward_.empty() ? 0 : forward_.rbegin()->first; }

  /// support ⊆ {1..n}.
  bool in_symmetric_group(index_type n) const noexcept { return max_moved() <= n; }

  Permutation inverse() const {
    Permutation out;
    for (auto [from, to] : forward_) out.forward_.emplace(to, from);
    return out;
  }

  /// Disjoint cycles, each led by its least point, ordered by least point;
  /// "()" for the identity.
  std::string to_string() const {
    if (forward_.empty()) return "()";
    std::string s;
    std::set<index_type> seen;
    for (auto [start, ignored] : forward_) {
      if (seen.contains(start)) continue;
      s += '(';
      index_type i = start;
      do {
        if (i != start) s += ' ';
        s += std::to_string(i);
        seen.insert(i);
        i = (*this)(i);
      } while (i != start);
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.forward_ <=> b.forward_; }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

 private:
  friend Permutation compose(const Permutation&, const Permutation&);
  std::map<index_type, index_type> forward_;
};

/// (σ ∘ τ)(i) = σ(τ(i)): τ acts first.
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
  std::set<index_type> points;
  for (auto [from, to] : sigma.forward_) points.insert(from);
  for (auto [from, to] : tau.forward_) points.insert(from);
  Permutation out;
  for (auto i : points) {
    index_type j = sigma(tau(i));
    if (j != i) out.forward_.emplace(i, j);
  }
  return out;
}

inline Permutation invert(const Permutation& sigma) { return sigma.inverse(); }

/// Product of cycles such as "(1 2)(3 5 4)", composed right to left; "()" is
/// the identity. Whitespace between tokens is ignored; single-point cycles are
/// accepted.
inline Permutation parse_permutation(std::string_view text) {
  Permutation result;
  std::vector<Permutation> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw parse_error("empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(') throw parse_error("expected '(' in permutation '" + std::string(text) + "'");
    ++pos;
    std::vector<index_type> points;
    for (;;) {
      skip_ws();
      if (pos == text.size()) throw parse_error("unterminated cycle in '" + std::string(text) + "'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw parse_error("unexpected character in permutation '" + std::string(text) + "'");
      }
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v > 0xFFFFFFFFULL) throw parse_error("permutation point out of range");
        ++pos;
      }
      if (v == 0) throw parse_error("permutation points are positive integers");
      points.push_back(static_cast<index_type>(v));
    }
    cycles.push_back(points.empty() ? Permutation() : Permutation::cycle(points));
    skip_ws();
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) result = compose(*it, result);
  return result;
}

/// All of S_n in lexicographic order of one-line notation (identity first).
inline std::vector<Permutation> symmetric_group(index_type n) {
  std::vector<index_type> line(n);
  std::iota(line.begin(), line.end(), index_type{1});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

/// σ x_i = x_{σ(i)}: the exponent of x_{σ(i)} in the result is that of x_i in m.
inline Monomial apply_perm(const Permutation& sigma, const Monomial& m) {
  std::map<index_type, exponent_type> counts;
  for (auto [i, e] : m.entries()) counts.emplace(sigma(i), e);
  return Monomial(counts);
}

inline Multiset apply_perm(const Permutation& sigma, const Multiset& m) {
  std::map<index_type, exponent_type> counts;
  for (auto [i, e] : m.entries()) counts.emplace(sigma(i), e);
  return Multiset(counts);
}

/// A permutation carrying canonical_monomial(type_of(m)) to m; witnesses that
/// m lies in the orbit of its canonical representative.
inline Permutation sorting_permutation(const Monomial& m) {
  std::vector<IndexPower> by_power(m.entries().begin(), m.entries().end());
  std::stable_sort(by_power.begin(), by_power.end(),
                   [](const IndexPower& a, const IndexPower& b) { return a.power > b.power; });
  // canonical index k + 1 -> by_power[k].index; complete to a bijection.
  std::map<index_type, index_type> images;
  std::set<index_type> used_targets;
  for (std::size_t k = 0; k < by_power.size(); ++k) {
    images.emplace(static_cast<index_type>(k + 1), by_power[k].index);
    used_targets.insert(by_power[k].index);
  }
  std::vector<index_type> free_sources;
  std::vector<index_type> free_targets;
  for (auto t : used_targets) {
    if (!images.contains(t)) free_sources.push_back(t);
  }
  for (auto [src, ignored] : images) {
    if (!used_targets.contains(src)) free_targets.push_back(src);
  }
  for (std::size_t k = 0; k < free_sources.size(); ++k) images.emplace(free_sources[k], free_targets[k]);
  return Permutation(images);
}

}  // namespace symideal
