#pragma once

// Reducing the action of an arbitrary bijection of the positive integers on a
// polynomial to the action of an element of a finite symmetric group S_N.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symideal/permutation.hpp"
#include "symideal/polynomial.hpp"

namespace symideal {

struct FiniteWitness {
  index_type bound;  // N
  Permutation tau;   // support(tau) ⊆ {1..N}
};

/// Relabels every index of f through an arbitrary index map.
template <ExactField F>
Polynomial<F> relabel(const std::function<index_type(index_type)>& sigma, const Polynomial<F>& f) {
  Polynomial<F> out(f.field());
  for (const auto& [m, c] : f.terms()) {
    std::map<index_type, exponent_type> counts;
    for (auto [i, e] : m.entries()) {
      if (!counts.emplace(sigma(i), e).second) {
        throw std::invalid_argument("index map is not injective on the indices of f");
      }
    }
    out.add_term(Monomial(counts), c);
  }
  return out;
}

/// Finds N and τ ∈ S_N with τf = σf, where σ need only be queryable on the
/// indices of f (it may have infinite support).
///
/// N is the largest of the indices of f and their images (1 for constants).
/// τ agrees with σ on the indices of f; the remaining points of {1..N} are
/// matched to the remaining images in increasing order.
template <ExactField F>
FiniteWitness finite_witness(const std::function<index_type(index_type)>& sigma, const Polynomial<F>& f) {
  const auto domain = f.indices();
  std::map<index_type, index_type> images;
  std::set<index_type> targets;
  index_type bound = 1;
  for (auto i : domain) {
    index_type j = sigma(i);
    if (j == 0) throw std::invalid_argument("index map must take positive values");
    if (!targets.insert(j).second) {
      throw std::invalid_argument("index map collides on the indices of f: no permutation realizes it");
    }
    images.emplace(i, j);
    bound = std::max({bound, i, j});
  }
  std::vector<index_type> free_sources;
  std::vector<index_type> free_targets;
  for (index_type k = 1; k <= bound; ++k) {
    if (!images.contains(k)) free_sources.push_back(k);
    if (!targets.contains(k)) free_targets.push_back(k);
  }
  for (std::size_t k = 0; k < free_sources.size(); ++k) images.emplace(free_sources[k], free_targets[k]);
  return {bound, Permutation(images)};
}

template <ExactField F>
FiniteWitness finite_witness(const Permutation& sigma, const Polynomial<F>& f) {
  return finite_witness<F>([&sigma](index_type i) { return sigma(i); }, f);
}

}  // namespace symideal
