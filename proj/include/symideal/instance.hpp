#pragma once

// Instances f_j = sum_i c_ij g_i built from monomials g_i of distinct types,
// the per-type coefficient-sum ("collapse") map, and the rank certificate
// bounding the number of S_inf-generators from below.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "symideal/error.hpp"
#include "symideal/matrix.hpp"
#include "symideal/monomial.hpp"
#include "symideal/partitions.hpp"
#include "symideal/polynomial.hpp"

namespace symideal {

/// Thrown when n > p(d).
class not_enough_types : public std::invalid_argument {
 public:
  not_enough_types() : std::invalid_argument("n exceeds p(d) distinct types at degree d") {}
};

/// The canonical monomials of the first n partitions of d.
inline std::vector<Monomial> distinct_type_monomials(std::size_t n, exponent_type d) {
  if (d == 0) throw std::invalid_argument("degree must be positive");
  auto types = partitions_of(d);
  if (n > types.size()) throw not_enough_types();
  std::vector<Monomial> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(canonical_monomial(types[i]));
  return out;
}

template <ExactField F>
struct InstanceSpec {
  std::size_t n;
  exponent_type d;
  F field;
  Matrix<F> matrix;                       // C, n×n
  std::vector<Partition> types;           // λ_1..λ_n, pairwise distinct
  std::vector<Monomial> monomials;        // G: g_i = canonical_monomial(λ_i)
  std::vector<Polynomial<F>> generators;  // F: f_j = sum_i c_ij g_i
};

template <ExactField F>
InstanceSpec<F> build_instance(const Matrix<F>& c, exponent_type d) {
  if (!c.is_square()) throw std::invalid_argument("coefficient matrix must be square");
  const std::size_t n = c.rows();
  auto monomials = distinct_type_monomials(n, d);
  std::vector<Partition> types;
  for (const auto& g : monomials) types.push_back(type_of(g));
  std::vector<Polynomial<F>> generators;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial<F> f(c.field());
    for (std::size_t i = 0; i < n; ++i) f.add_term(monomials[i], c(i, j));
    generators.push_back(std::move(f));
  }
  return InstanceSpec<F>{n, d, c.field(), c, std::move(types), std::move(monomials), std::move(generators)};
}

/// Component i is the sum of the coefficients of the degree-d monomials of
/// type λ_i in p. Monomials of other degrees or types are ignored.
template <ExactField F>
std::vector<typename F::value_type> collapse(const Polynomial<F>& p, const std::vector<Partition>& types,
                                             std::uint64_t d) {
  std::map<Partition, std::size_t> slot;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (!slot.emplace(types[i], i).second) throw std::invalid_argument("collapse types must be distinct");
  }
  std::vector<typename F::value_type> out(types.size(), p.field().zero());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) continue;
    auto it = slot.find(type_of(m));
    if (it != slot.end()) out[it->second] = out[it->second] + c;
  }
  return out;
}

template <ExactField F>
std::vector<typename F::value_type> collapse(const Polynomial<F>& p, const InstanceSpec<F>& instance) {
  return collapse(p, instance.types, instance.d);
}

template <ExactField F>
struct CollapseCertificate {
  InstanceSpec<F> instance;
  std::size_t rank;
  std::vector<std::vector<typename F::value_type>> collapse_vectors;  // Φ(f_j)
  std::string verdict;
};

inline std::string lower_bound_verdict(std::size_t rank, std::size_t n) {
  return "any R[S_inf]-generating set of this module has at least " + std::to_string(rank) + " generators" +
         " (" + std::to_string(n) + " generators suffice)";
}

/// rank(C) together with the collapse vectors Φ(f_j), checked to equal the
/// columns of C and to span a space of dimension rank(C).
template <ExactField F>
CollapseCertificate<F> lower_bound_certificate(const InstanceSpec<F>& instance) {
  const std::size_t r = rank(instance.matrix);
  std::vector<std::vector<typename F::value_type>> vectors;
  for (std::size_t j = 0; j < instance.n; ++j) {
    auto v = collapse(instance.generators[j], instance);
    if (v != instance.matrix.column(j)) {
      throw consistency_error("collapse of f_" + std::to_string(j + 1) + " differs from column " +
                              std::to_string(j + 1) + " of C");
    }
    vectors.push_back(std::move(v));
  }
  if (span_dimension(instance.field, instance.n, vectors) != r) {
    throw consistency_error("collapse vectors do not span a space of dimension rank(C)");
  }
  return {instance, r, std::move(vectors), lower_bound_verdict(r, instance.n)};
}

/// dim span{Φ(p_l)}. When the candidates generate the instance module this
/// equals rank(C), so every generating set has at least rank(C) elements.
template <ExactField F>
std::size_t candidate_lower_bound(const std::vector<Polynomial<F>>& candidates, const InstanceSpec<F>& instance) {
  if (candidates.empty()) throw std::invalid_argument("candidate list must be nonempty");
  std::vector<std::vector<typename F::value_type>> vectors;
  for (const auto& p : candidates) vectors.push_back(collapse(p, instance));
  return span_dimension(instance.field, instance.n, vectors);
}

}  // namespace symideal
