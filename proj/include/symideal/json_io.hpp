#pragma once

// JSON encodings of instances, certificates, witnesses and truncation reports.
// Scalars are written as strings in the field's text form so values stay exact.

#include <nlohmann/json.hpp>

#include "symideal/instance.hpp"
#include "symideal/oracle.hpp"

namespace symideal {

using json = nlohmann::ordered_json;

namespace detail {

template <ExactField F>
json scalars_to_json(const F& field, const std::vector<typename F::value_type>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(field.format(v));
  return out;
}

inline json partition_to_json(const Partition& p) {
  json out = json::array();
  for (auto part : p.parts()) out.push_back(part);
  return out;
}

}  // namespace detail

template <ExactField F>
json instance_to_json(const InstanceSpec<F>& instance) {
  json out;
  out["n"] = instance.n;
  out["d"] = instance.d;
  out["field"] = instance.field.selector();
  out["matrix"] = instance.matrix.to_string();
  out["types"] = json::array();
  for (const auto& t : instance.types) out["types"].push_back(detail::partition_to_json(t));
  out["generators_G"] = json::array();
  for (const auto& g : instance.monomials) out["generators_G"].push_back(g.to_string());
  out["generators_F"] = json::array();
  for (const auto& f : instance.generators) out["generators_F"].push_back(f.to_string());
  return out;
}

/// {n, d, field, matrix, types, generators_G, generators_F, rank, collapse_vectors, verdict}
template <ExactField F>
json certificate_to_json(const CollapseCertificate<F>& cert) {
  json out = instance_to_json(cert.instance);
  out["rank"] = cert.rank;
  out["collapse_vectors"] = json::array();
  for (const auto& v : cert.collapse_vectors) {
    out["collapse_vectors"].push_back(detail::scalars_to_json(cert.instance.field, v));
  }
  out["verdict"] = cert.verdict;
  return out;
}

template <ExactField F>
json witness_to_json(const F& field, const CombinationWitness<F>& witness) {
  json out = json::array();
  for (const auto& e : witness.entries) {
    json entry;
    entry["generator"] = e.generator + 1;
    entry["multiplier"] = e.multiplier.to_string();
    entry["permutation"] = e.sigma.to_string();
    entry["coefficient"] = field.format(e.coefficient);
    out.push_back(std::move(entry));
  }
  return out;
}

/// {params: {N, D}, per_generator: [{j, status, witness?}], candidate_lower_bound,
///  instance_rank, consistent}, plus the candidate list and candidates_in_module.
template <ExactField F>
json report_to_json(const F& field, const GenerationReport<F>& report) {
  json out;
  out["params"] = {{"N", report.params.N}, {"D", report.params.D}};
  out["candidates"] = json::array();
  for (const auto& p : report.candidates) out["candidates"].push_back(p.to_string());
  out["per_generator"] = json::array();
  for (const auto& r : report.per_generator) {
    json entry;
    entry["j"] = r.j;
    entry["status"] = r.member() ? "member" : "not_in_truncation";
    if (r.member()) entry["witness"] = witness_to_json(field, *r.witness);
    out["per_generator"].push_back(std::move(entry));
  }
  out["candidate_lower_bound"] = report.candidate_lower_bound;
  out["instance_rank"] = report.instance_rank;
  out["candidates_in_module"] = report.candidates_in_module;
  out["consistent"] = report.consistent();
  return out;
}

}  // namespace symideal
