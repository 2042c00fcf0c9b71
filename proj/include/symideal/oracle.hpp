#pragma once

// Brute-force module membership at a finite truncation: variables x_1..x_N,
// permutations from S_N, total degree at most D. Within a truncation,
// membership in the R[S_N]-module generated by p_1..p_k is a finite exact
// linear system over K.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symideal/error.hpp"
#include "symideal/instance.hpp"
#include "symideal/matrix.hpp"
#include "symideal/permutation.hpp"
#include "symideal/polynomial.hpp"

namespace symideal {

struct TruncationParams {
  static constexpr index_type kMaxN = 8;

  index_type N = 1;
  std::uint64_t D = 0;

  void validate() const {
    if (N < 1) throw bound_error("truncation requires N >= 1");
    if (N > kMaxN) throw bound_error("truncation N = " + std::to_string(N) + " exceeds the limit " + std::to_string(kMaxN));
  }

  friend bool operator==(const TruncationParams&, const TruncationParams&) = default;
};

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

namespace detail {

inline void place_exponents(std::span<const IndexPower> entries, std::size_t k, index_type n, std::vector<bool>& used,
                            std::map<index_type, exponent_type>& counts, std::set<Monomial>& out) {
  if (k == entries.size()) {
    out.insert(Monomial(counts));
    return;
  }
  for (index_type target = 1; target <= n; ++target) {
    if (used[target]) continue;
    used[target] = true;
    counts.emplace(target, entries[k].power);
    place_exponents(entries, k + 1, n, used, counts, out);
    counts.erase(target);
    used[target] = false;
  }
}

inline void monomials_of_degree_rec(index_type index, index_type n, std::uint64_t remaining,
                                    std::map<index_type, exponent_type>& counts, std::set<Monomial>& out) {
  if (remaining == 0) {
    out.insert(Monomial(counts));
    return;
  }
  if (index > n) return;
  for (std::uint64_t e = 0; e <= remaining; ++e) {
    if (e) counts[index] = static_cast<exponent_type>(e);
    monomials_of_degree_rec(index + 1, n, remaining - e, counts, out);
  }
  counts.erase(index);
}

}  // namespace detail

/// {σm : σ ∈ S_N}, computed as all injective placements of the exponents of m
/// into {1..N}.
inline std::set<Monomial> orbit_truncated(const Monomial& m, index_type n) {
  if (m.max_index() > n) {
    throw bound_error("monomial " + m.to_string() + " uses an index above N = " + std::to_string(n));
  }
  std::set<Monomial> out;
  std::vector<bool> used(n + 1, false);
  std::map<index_type, exponent_type> counts;
  detail::place_exponents(m.entries(), 0, n, used, counts, out);
  return out;
}

/// All monomials in x_1..x_N of the given type.
inline std::set<Monomial> monomials_of_type(const Partition& type, index_type n) {
  if (type.length() > n) {
    throw bound_error("type " + type.to_string() + " has more parts than N = " + std::to_string(n));
  }
  return orbit_truncated(canonical_monomial(type), n);
}

/// Monomials in x_1..x_N of degree at most k, in graded order.
inline std::set<Monomial> monomials_up_to_degree(index_type n, std::uint64_t k) {
  std::set<Monomial> out;
  std::map<index_type, exponent_type> counts;
  for (std::uint64_t d = 0; d <= k; ++d) detail::monomials_of_degree_rec(1, n, d, counts, out);
  return out;
}

// ---------------------------------------------------------------------------
// Spanning sets and witnesses
// ---------------------------------------------------------------------------

/// One product u · σ(p_l) of the truncated module.
template <ExactField F>
struct SpanElement {
  Polynomial<F> value;
  std::size_t generator;  // l, 0-based
  Monomial multiplier;    // u
  Permutation sigma;
};

namespace detail {

template <ExactField F>
void check_fits(const Polynomial<F>& p, const TruncationParams& params, const std::string& what) {
  if (p.max_index() > params.N) {
    throw bound_error(what + " " + p.to_string() + " uses an index above N = " + std::to_string(params.N));
  }
  if (p.degree().value_or(0) > params.D) {
    throw bound_error(what + " " + p.to_string() + " has degree above D = " + std::to_string(params.D));
  }
}

}  // namespace detail

/// Every distinct nonzero u · σ(p) with p a generator, σ ∈ S_N and u a
/// monomial in x_1..x_N with deg(u) + deg(p) <= D. Order: generator, then σ
/// in lexicographic one-line order, then u in graded order; the first
/// occurrence of each polynomial is kept.
template <ExactField F>
std::vector<SpanElement<F>> spanning_set(const std::vector<Polynomial<F>>& generators, const TruncationParams& params) {
  params.validate();
  for (const auto& p : generators) detail::check_fits(p, params, "generator");
  const auto group = symmetric_group(params.N);
  std::vector<SpanElement<F>> out;
  std::set<Polynomial<F>> seen;
  for (std::size_t l = 0; l < generators.size(); ++l) {
    const auto& p = generators[l];
    if (p.is_zero()) continue;
    const auto multipliers = monomials_up_to_degree(params.N, params.D - *p.degree());
    std::set<Polynomial<F>> images;
    for (const auto& sigma : group) {
      auto image = apply_perm(sigma, p);
      if (!images.insert(image).second) continue;
      for (const auto& u : multipliers) {
        auto value = u * image;
        if (!seen.insert(value).second) continue;
        out.push_back({std::move(value), l, u, sigma});
      }
    }
  }
  return out;
}

/// f = Σ coefficient · multiplier · sigma(p_generator).
template <ExactField F>
struct CombinationWitness {
  struct Entry {
    std::size_t generator;
    Monomial multiplier;
    Permutation sigma;
    typename F::value_type coefficient;
  };

  std::vector<Entry> entries;

  Polynomial<F> substitute(const F& field, const std::vector<Polynomial<F>>& generators) const {
    Polynomial<F> out(field);
    for (const auto& e : entries) out.add_scaled(e.coefficient, e.multiplier, apply_perm(e.sigma, generators.at(e.generator)));
    return out;
  }

  /// The coefficient polynomials s_{lσ} = Σ_u coefficient · u, keyed by (l, σ).
  std::map<std::pair<std::size_t, Permutation>, Polynomial<F>> coefficient_polynomials(const F& field) const {
    std::map<std::pair<std::size_t, Permutation>, Polynomial<F>> out;
    for (const auto& e : entries) {
      auto key = std::make_pair(e.generator, e.sigma);
      auto it = out.try_emplace(key, field).first;
      it->second.add_term(e.multiplier, e.coefficient);
    }
    return out;
  }

  /// "(1 2)·x1^2 + 2*x3*()·(x1 + x2)"; "0" when empty.
  std::string to_string(const F& field, const std::vector<Polynomial<F>>& generators) const {
    if (entries.empty()) return "0";
    std::string s;
    for (const auto& e : entries) {
      if (!s.empty()) s += " + ";
      auto coef = field.format(e.coefficient);
      if (coef != "1") s += coef + "*";
      if (!e.multiplier.is_one()) s += e.multiplier.to_string() + "*";
      s += e.sigma.to_string() + "·";
      const auto& p = generators.at(e.generator);
      s += p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
    }
    return s;
  }
};

/// The K-span of a spanning set, kept as an echelon basis. Each basis vector
/// carries its expression in the original spanning elements. The pivot of a
/// vector is its least monomial in graded order.
template <ExactField F>
class TruncatedModule {
 public:
  using value_type = typename F::value_type;
  using combination = std::map<std::size_t, value_type>;

  TruncatedModule(const F& field, std::vector<Polynomial<F>> generators, const TruncationParams& params)
      : field_(field), generators_(std::move(generators)), params_(params), elements_(spanning_set(generators_, params)) {
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      Polynomial<F> vec = elements_[k].value;
      combination comb{{k, field_.one()}};
      reduce(vec, comb);
      if (vec.is_zero()) continue;
      auto [pivot, lead] = *vec.terms().begin();
      auto inv = field_.inverse(lead);
      vec *= inv;
      for (auto& [idx, c] : comb) c = c * inv;
      basis_.emplace(pivot, BasisVector{std::move(vec), std::move(comb)});
    }
  }

  const std::vector<SpanElement<F>>& elements() const noexcept { return elements_; }
  const std::vector<Polynomial<F>>& generators() const noexcept { return generators_; }
  const TruncationParams& params() const noexcept { return params_; }
  std::size_t dimension() const noexcept { return basis_.size(); }

  /// A witness for f, or nullopt when f is not in this truncation. The witness
  /// is re-substituted and compared with f before it is returned.
  std::optional<CombinationWitness<F>> membership(const Polynomial<F>& f) const {
    detail::check_fits(f, params_, "target");
    Polynomial<F> rest = f;
    combination used;
    reduce(rest, used);
    if (!rest.is_zero()) return std::nullopt;
    CombinationWitness<F> witness;
    // rest - Σ used[k]·element_k = f and rest = 0.
    for (const auto& [k, c] : used) {
      const auto& e = elements_[k];
      witness.entries.push_back({e.generator, e.multiplier, e.sigma, -c});
    }
    if (!(witness.substitute(field_, generators_) == f)) {
      throw consistency_error("membership witness does not re-substitute to " + f.to_string());
    }
    return witness;
  }

 private:
  struct BasisVector {
    Polynomial<F> vec;
    combination comb;  // vec = Σ comb[k] · elements_[k].value
  };

  // Subtracts basis vectors at pivot monomials until none remains. Keeps
  // vec - Σ comb[k]·element_k unchanged.
  void reduce(Polynomial<F>& vec, combination& comb) const {
    auto it = vec.terms().begin();
    while (it != vec.terms().end()) {
      auto found = basis_.find(it->first);
      if (found == basis_.end()) {
        ++it;
        continue;
      }
      const Monomial pivot = it->first;
      const value_type c = it->second;
      vec.add_scaled(-c, Monomial::one(), found->second.vec);
      for (const auto& [k, v] : found->second.comb) add_to(comb, k, -(c * v));
      it = vec.terms().upper_bound(pivot);
    }
  }

  void add_to(combination& comb, std::size_t k, const value_type& v) const {
    auto [it, inserted] = comb.try_emplace(k, v);
    if (!inserted) {
      it->second = it->second + v;
      if (field_.is_zero(it->second)) comb.erase(it);
    }
  }

  F field_;
  std::vector<Polynomial<F>> generators_;
  TruncationParams params_;
  std::vector<SpanElement<F>> elements_;
  std::map<Monomial, BasisVector> basis_;
};

/// Truncated membership of f in the R[S_N]-module generated by `generators`.
/// nullopt means "not in this truncation", which says nothing about larger N or D.
template <ExactField F>
std::optional<CombinationWitness<F>> membership(const Polynomial<F>& f, const std::vector<Polynomial<F>>& generators,
                                                const TruncationParams& params) {
  return TruncatedModule<F>(f.field(), generators, params).membership(f);
}

// ---------------------------------------------------------------------------
// Cross-validation against an instance
// ---------------------------------------------------------------------------

template <ExactField F>
struct MemberResult {
  std::size_t j;  // 1-based generator index
  std::optional<CombinationWitness<F>> witness;

  bool member() const noexcept { return witness.has_value(); }
};

template <ExactField F>
struct GenerationReport {
  TruncationParams params;
  std::vector<Polynomial<F>> candidates;
  std::vector<MemberResult<F>> per_generator;
  std::size_t candidate_lower_bound = 0;
  std::size_t instance_rank = 0;
  // Every candidate is a truncated member of <f_1..f_n>, hence lies in I.
  bool candidates_in_module = false;
  // All f_j were reached, the candidates lie in I, and still fewer collapse
  // dimensions than rank(C): forbidden by the rank bound.
  bool impossible = false;

  bool all_members() const {
    for (const auto& r : per_generator) {
      if (!r.member()) return false;
    }
    return true;
  }
  bool consistent() const noexcept { return !impossible; }
};

/// Runs truncated membership of each f_j against the candidates and compares
/// the outcome with the collapse bound.
template <ExactField F>
GenerationReport<F> verify_generation(const InstanceSpec<F>& instance, const std::vector<Polynomial<F>>& candidates,
                                      const TruncationParams& params) {
  if (candidates.empty()) throw std::invalid_argument("candidate list must be nonempty");
  GenerationReport<F> report;
  report.params = params;
  report.candidates = candidates;
  TruncatedModule<F> by_candidates(instance.field, candidates, params);
  for (std::size_t j = 0; j < instance.n; ++j) {
    report.per_generator.push_back({j + 1, by_candidates.membership(instance.generators[j])});
  }
  TruncatedModule<F> by_instance(instance.field, instance.generators, params);
  report.candidates_in_module = true;
  for (const auto& p : candidates) {
    if (!by_instance.membership(p)) {
      report.candidates_in_module = false;
      break;
    }
  }
  report.candidate_lower_bound = candidate_lower_bound(candidates, instance);
  report.instance_rank = rank(instance.matrix);
  report.impossible =
      report.all_members() && report.candidates_in_module && report.candidate_lower_bound < report.instance_rank;
  return report;
}

template <ExactField F>
struct UvCheck {
  Matrix<F> u;  // n×k, U_il = Φ(p_l)_i
  Matrix<F> v;  // k×n, V_lj = Σ_σ constant term of s_ljσ
  bool holds;   // C == U·V
};

/// Rebuilds the factorization C = U·V from candidates and one membership
/// witness per f_j.
template <ExactField F>
UvCheck<F> uv_factorization_check(const InstanceSpec<F>& instance, const std::vector<Polynomial<F>>& candidates,
                                  const std::vector<CombinationWitness<F>>& witnesses) {
  const std::size_t k = candidates.size();
  if (k == 0) throw std::invalid_argument("candidate list must be nonempty");
  if (witnesses.size() != instance.n) throw std::invalid_argument("need one witness per instance generator");
  Matrix<F> u(instance.field, instance.n, k);
  for (std::size_t l = 0; l < k; ++l) {
    auto phi = collapse(candidates[l], instance);
    for (std::size_t i = 0; i < instance.n; ++i) u(i, l) = phi[i];
  }
  Matrix<F> v(instance.field, k, instance.n);
  for (std::size_t j = 0; j < instance.n; ++j) {
    for (const auto& [key, s] : witnesses[j].coefficient_polynomials(instance.field)) {
      if (key.first >= k) throw std::invalid_argument("witness refers to a missing candidate");
      v(key.first, j) = v(key.first, j) + constant_term(s);
    }
  }
  bool holds = (u * v) == instance.matrix;
  return {std::move(u), std::move(v), holds};
}

}  // namespace symideal
