#pragma once

// Multisets of positive integers, the monomials they index, and their types.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symideal {

/// Variable index i of x_i; always >= 1.
using index_type = std::uint32_t;
/// Multiplicity / exponent; stored values are always >= 1.
using exponent_type = std::uint32_t;

struct IndexPower {
  index_type index;
  exponent_type power;

  friend auto operator<=>(const IndexPower&, const IndexPower&) = default;
};

namespace detail {

/// Sorted, zero-free list of (index, count) pairs shared by Multiset and Monomial.
class IndexCounts {
 public:
  IndexCounts() = default;

  explicit IndexCounts(std::map<index_type, exponent_type> const& counts) {
    for (auto [i, e] : counts) push(i, e);
  }

  /// Accepts unsorted input with repeated indices; repeated entries accumulate.
  IndexCounts(std::initializer_list<IndexPower> entries) {
    std::map<index_type, exponent_type> acc;
    for (auto [i, e] : entries) {
      check_index(i);
      acc[i] += e;
    }
    for (auto [i, e] : acc) push(i, e);
  }

  std::span<const IndexPower> entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Count attached to index i, 0 if absent.
  exponent_type count(index_type i) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const IndexPower& e, index_type k) { return e.index < k; });
    return (it != entries_.end() && it->index == i) ? it->power : 0;
  }

  std::uint64_t total() const noexcept { return total_; }

  index_type max_index() const noexcept { return entries_.empty() ? 0 : entries_.back().index; }

 protected:
  static void check_index(index_type i) {
    if (i == 0) throw std::invalid_argument("variable indices are positive integers");
  }

  // Requires indices pushed in strictly increasing order.
  void push(index_type i, exponent_type e) {
    check_index(i);
    if (e == 0) return;
    if (!entries_.empty() && entries_.back().index >= i) {
      throw std::invalid_argument("indices must be strictly increasing");
    }
    entries_.push_back({i, e});
    total_ += e;
  }

  std::vector<IndexPower> entries_;
  std::uint64_t total_ = 0;
};

}  // namespace detail

/// A finite multiset of positive integers: index -> multiplicity.
class Multiset : public detail::IndexCounts {
 public:
  using IndexCounts::IndexCounts;

  /// Builds {1,1,1,2,3,3}-style element lists.
  static Multiset from_elements(std::span<const index_type> elements) {
    std::map<index_type, exponent_type> acc;
    for (auto i : elements) ++acc[i];
    return Multiset(acc);
  }

  exponent_type multiplicity(index_type i) const noexcept { return count(i); }
  std::uint64_t cardinality() const noexcept { return total(); }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.entries_ == b.entries_; }
};

/// A monomial of K[x_1, x_2, ...]: index -> positive exponent. The empty
/// monomial is 1.
///
/// Ordering is graded: by total degree, then lexicographically on the
/// (index, exponent) pair sequence. This is the display order of polynomial
/// terms.
class Monomial : public detail::IndexCounts {
 public:
  using IndexCounts::IndexCounts;

  static Monomial one() { return Monomial(); }
  static Monomial variable(index_type i, exponent_type e = 1) { return Monomial{{i, e}}; }

  std::uint64_t degree() const noexcept { return total(); }
  exponent_type exponent(index_type i) const noexcept { return count(i); }
  bool is_one() const noexcept { return empty(); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_ <=> b.total_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() || j != b.entries_.end()) {
      if (j == b.entries_.end() || (i != a.entries_.end() && i->index < j->index)) {
        out.push(i->index, i->power);
        ++i;
      } else if (i == a.entries_.end() || j->index < i->index) {
        out.push(j->index, j->power);
        ++j;
      } else {
        out.push(i->index, i->power + j->power);
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// "1", "x1", "x1^2*x3".
  std::string to_string() const {
    if (empty()) return "1";
    std::string s;
    for (auto [i, e] : entries_) {
      if (!s.empty()) s += '*';
      s += 'x' + std::to_string(i);
      if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }
};

/// A weakly decreasing sequence of positive integers; the type of a multiset.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<exponent_type> parts) : parts_(std::move(parts)) {
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (parts_[j] == 0) throw std::invalid_argument("partition parts must be positive");
      if (j + 1 < parts_.size() && parts_[j] < parts_[j + 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
      }
    }
  }
  Partition(std::initializer_list<exponent_type> parts) : Partition(std::vector<exponent_type>(parts)) {}

  std::span<const exponent_type> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint64_t weight() const noexcept {
    std::uint64_t s = 0;
    for (auto p : parts_) s += p;
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// "(3,2,1)"; the empty partition is "()".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(parts_[j]);
    }
    return s + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

 private:
  std::vector<exponent_type> parts_;
};

/// The multiplicities sorted weakly decreasing.
inline Partition type_of(const detail::IndexCounts& m) {
  std::vector<exponent_type> parts;
  parts.reserve(m.size());
  for (auto [i, e] : m.entries()) parts.push_back(e);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

inline Monomial multiset_to_monomial(const Multiset& m) {
  std::map<index_type, exponent_type> counts;
  for (auto [i, e] : m.entries()) counts.emplace(i, e);
  return Monomial(counts);
}

inline Multiset monomial_to_multiset(const Monomial& m) {
  std::map<index_type, exponent_type> counts;
  for (auto [i, e] : m.entries()) counts.emplace(i, e);
  return Multiset(counts);
}

/// x_1^{l_1} x_2^{l_2} ... x_k^{l_k}: the representative of the orbit of type l.
inline Monomial canonical_monomial(const Partition& type) {
  std::map<index_type, exponent_type> counts;
  index_type i = 1;
  for (auto part : type.parts()) counts.emplace(i++, part);
  return Monomial(counts);
}

}  // namespace symideal
