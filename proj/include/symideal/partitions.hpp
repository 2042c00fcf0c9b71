#pragma once

#include <cstdint>
#include <vector>

#include "symideal/monomial.hpp"

namespace symideal {

namespace detail {

inline void partitions_rec(exponent_type remaining, exponent_type largest, std::vector<exponent_type>& prefix,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (exponent_type part = std::min(remaining, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Every partition of d exactly once, in descending lexicographic order:
/// (d) first, (1,...,1) last.
inline std::vector<Partition> partitions_of(exponent_type d) {
  std::vector<Partition> out;
  std::vector<exponent_type> prefix;
  detail::partitions_rec(d, d, prefix, out);
  return out;
}

/// p(d) via the standard "parts at most k" recurrence.
inline std::uint64_t partition_count(exponent_type d) {
  std::vector<std::uint64_t> ways(d + 1, 0);
  ways[0] = 1;
  for (exponent_type part = 1; part <= d; ++part) {
    for (exponent_type s = part; s <= d; ++s) ways[s] += ways[s - part];
  }
  return ways[d];
}

}  // namespace symideal
