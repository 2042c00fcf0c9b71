#pragma once

// Command-line front end: construct, certify, member, witness, demo.
//
// Exit codes: 0 success / member, 1 internal error, 2 usage or parse error,
// 3 not in truncation.

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "symideal/json_io.hpp"
#include "symideal/symideal.hpp"

namespace symideal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotInTruncation = 3;

struct CliConfig {
  std::string field = "q";
  std::uint64_t seed = 0;
  bool json = false;
};

using AnyField = std::variant<RationalField, PrimeField>;

/// "q" selects Q, "p=<prime>" selects F_p.
inline AnyField parse_field(const std::string& selector) {
  if (selector == "q" || selector == "Q") return RationalField{};
  if (selector.rfind("p=", 0) == 0) {
    auto digits = selector.substr(2);
    if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw parse_error("invalid field selector '" + selector + "'");
    }
    auto p = std::stoull(digits);
    if (p >= (1ULL << 31) || !is_prime(p)) throw parse_error("field modulus must be a prime below 2^31");
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw parse_error("invalid field selector '" + selector + "' (expected q or p=<prime>)");
}

namespace detail {

struct InstanceArgs {
  std::size_t n = 0;
  exponent_type d = 0;
  std::optional<std::string> matrix;
  std::optional<std::size_t> rank;
};

template <ExactField F>
InstanceSpec<F> make_instance(const F& field, const InstanceArgs& args, std::uint64_t seed) {
  if (args.matrix && args.rank) throw std::invalid_argument("give either -C or --rank, not both");
  Matrix<F> c = args.matrix  ? parse_matrix(*args.matrix, field)
                : args.rank ? random_matrix_of_rank(field, args.n, *args.rank, seed)
                            : Matrix<F>::identity(field, args.n);
  if (c.rows() != args.n || c.cols() != args.n) {
    throw std::invalid_argument("matrix must be " + std::to_string(args.n) + "x" + std::to_string(args.n));
  }
  return build_instance(c, args.d);
}

template <ExactField F>
void print_instance(std::ostream& out, const InstanceSpec<F>& inst) {
  out << "field: " << inst.field.name() << "\n";
  out << "n = " << inst.n << ", d = " << inst.d << "\n";
  out << "C = " << inst.matrix.to_string() << "\n";
  out << "types:";
  for (const auto& t : inst.types) out << ' ' << t;
  out << "\nG:";
  for (std::size_t i = 0; i < inst.n; ++i) out << (i ? ", " : " ") << inst.monomials[i];
  out << "\nF:";
  for (std::size_t j = 0; j < inst.n; ++j) out << (j ? ", " : " ") << "f" << j + 1 << " = " << inst.generators[j];
  out << "\n";
}

template <ExactField F>
void print_certificate(std::ostream& out, const CollapseCertificate<F>& cert) {
  print_instance(out, cert.instance);
  for (std::size_t j = 0; j < cert.collapse_vectors.size(); ++j) {
    out << "collapse(f" << j + 1 << ") = [";
    for (std::size_t i = 0; i < cert.collapse_vectors[j].size(); ++i) {
      out << (i ? ", " : "") << cert.instance.field.format(cert.collapse_vectors[j][i]);
    }
    out << "]\n";
  }
  out << "rank = " << cert.rank << "\n";
  out << "verdict: " << cert.verdict << "\n";
}

template <ExactField F>
void print_report(std::ostream& out, const F& field, const GenerationReport<F>& report) {
  out << "truncation N = " << report.params.N << ", D = " << report.params.D << "; candidates:";
  for (std::size_t l = 0; l < report.candidates.size(); ++l) {
    out << (l ? ", " : " ") << "p" << l + 1 << " = " << report.candidates[l];
  }
  out << "\n";
  for (const auto& r : report.per_generator) {
    out << "  f" << r.j << ": ";
    if (r.member()) {
      out << "member, witness " << r.witness->to_string(field, report.candidates) << "\n";
    } else {
      out << "not in truncation\n";
    }
  }
  out << "  candidate_lower_bound = " << report.candidate_lower_bound << ", rank(C) = " << report.instance_rank
      << ", candidates_in_module = " << (report.candidates_in_module ? "yes" : "no") << ", "
      << (report.consistent() ? "consistent" : "IMPOSSIBLE") << "\n";
}

template <ExactField F>
int cmd_construct(const F& field, const CliConfig& cfg, const InstanceArgs& args, std::ostream& out) {
  auto inst = make_instance(field, args, cfg.seed);
  if (cfg.json) {
    out << instance_to_json(inst).dump(2) << "\n";
  } else {
    print_instance(out, inst);
  }
  return kExitOk;
}

template <ExactField F>
int cmd_certify(const F& field, const CliConfig& cfg, const InstanceArgs& args, std::ostream& out) {
  auto cert = lower_bound_certificate(make_instance(field, args, cfg.seed));
  if (cfg.json) {
    out << certificate_to_json(cert).dump(2) << "\n";
  } else {
    print_certificate(out, cert);
  }
  return kExitOk;
}

struct MemberArgs {
  std::string f;
  std::vector<std::string> generators;
  index_type N = 1;
  std::uint64_t D = 0;
};

template <ExactField F>
int cmd_member(const F& field, const CliConfig& cfg, const MemberArgs& args, std::ostream& out) {
  auto f = parse_polynomial(args.f, field);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : args.generators) gens.push_back(parse_polynomial(g, field));
  TruncationParams params{args.N, args.D};
  auto witness = membership(f, gens, params);
  if (cfg.json) {
    json j;
    j["params"] = {{"N", params.N}, {"D", params.D}};
    j["f"] = f.to_string();
    j["generators"] = json::array();
    for (const auto& g : gens) j["generators"].push_back(g.to_string());
    j["status"] = witness ? "member" : "not_in_truncation";
    if (witness) j["witness"] = witness_to_json(field, *witness);
    out << j.dump(2) << "\n";
  } else if (witness) {
    out << "member\nwitness: " << witness->to_string(field, gens) << "\n";
  } else {
    out << "not in truncation (N = " << params.N << ", D = " << params.D << ")\n";
  }
  return witness ? kExitOk : kExitNotInTruncation;
}

template <ExactField F>
int cmd_witness(const F& field, const CliConfig& cfg, const std::string& sigma_text, const std::string& f_text,
                std::ostream& out) {
  auto sigma = parse_permutation(sigma_text);
  auto f = parse_polynomial(f_text, field);
  auto result = finite_witness(sigma, f);
  auto image = apply_perm(result.tau, f);
  if (!(image == apply_perm(sigma, f)) || !result.tau.in_symmetric_group(result.bound)) {
    throw consistency_error("finite witness does not reproduce sigma f");
  }
  if (cfg.json) {
    json j;
    j["sigma"] = sigma.to_string();
    j["f"] = f.to_string();
    j["N"] = result.bound;
    j["tau"] = result.tau.to_string();
    j["tau_f"] = image.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << "N = " << result.bound << "\ntau = " << result.tau << "\ntau f = sigma f = " << image << "\n";
  }
  return kExitOk;
}

/// C = I_2, d = 2: the module <x1^2, x1*x2> needs two generators.
template <ExactField F>
int cmd_demo(const F& field, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  auto inst = build_instance(Matrix<F>::identity(field, 2), 2);
  auto cert = lower_bound_certificate(inst);
  const TruncationParams params{4, 2};
  const auto& f = inst.generators;
  std::vector<GenerationReport<F>> reports;
  for (const auto& candidates : {std::vector{f[0]}, std::vector{f[1]}, std::vector{f[0], f[1]}}) {
    reports.push_back(verify_generation(inst, candidates, params));
  }
  bool consistent = true;
  for (const auto& r : reports) consistent = consistent && r.consistent();
  if (cfg.json) {
    json j;
    j["certificate"] = certificate_to_json(cert);
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(report_to_json(field, r));
    j["consistent"] = consistent;
    out << j.dump(2) << "\n";
  } else {
    print_certificate(out, cert);
    out << "\n";
    for (const auto& r : reports) print_report(out, field, r);
  }
  if (!consistent) {
    err << "error: a truncation report contradicts the rank bound\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace detail

/// Parses argv, dispatches, and maps failures onto exit codes.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Symmetric-ideal generator lower bounds: instances, rank certificates, truncated membership"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_option("--field", cfg.field, "Coefficient field: q or p=<prime>")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random instances")->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.fallthrough();

  detail::InstanceArgs inst_args;
  auto add_instance_options = [&](CLI::App* sub) {
    sub->add_option("-n", inst_args.n, "Number of generators")->required()->check(CLI::PositiveNumber);
    sub->add_option("-d", inst_args.d, "Common degree")->required()->check(CLI::PositiveNumber);
    sub->add_option("-C,--matrix", inst_args.matrix, "Coefficient matrix, e.g. \"1,0;0,1\"");
    sub->add_option("--rank", inst_args.rank, "Draw a random matrix of this rank");
  };
  auto* construct = app.add_subcommand("construct", "Build an instance f_j = sum_i c_ij g_i");
  add_instance_options(construct);
  auto* certify = app.add_subcommand("certify", "Print the rank lower-bound certificate");
  add_instance_options(certify);

  detail::MemberArgs member_args;
  auto* member = app.add_subcommand("member", "Truncated membership of f in the module generated by -g ...");
  member->add_option("-f", member_args.f, "Target polynomial")->required();
  member->add_option("-g,--gen", member_args.generators, "Generator polynomial (repeatable)")->required();
  member->add_option("-N", member_args.N, "Variable and group bound")->required();
  member->add_option("-D", member_args.D, "Total degree bound")->required();

  std::string sigma_text;
  std::string witness_f;
  auto* witness = app.add_subcommand("witness", "Find N and tau in S_N with tau f = sigma f");
  witness->add_option("--sigma", sigma_text, "Permutation in cycle notation")->required();
  witness->add_option("-f", witness_f, "Polynomial")->required();

  auto* demo = app.add_subcommand("demo", "Worked example: <x1^2, x1*x2> needs two generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto field = parse_field(cfg.field);
    return std::visit(
        [&](const auto& k) -> int {
          if (*construct) return detail::cmd_construct(k, cfg, inst_args, out);
          if (*certify) return detail::cmd_certify(k, cfg, inst_args, out);
          if (*member) return detail::cmd_member(k, cfg, member_args, out);
          if (*witness) return detail::cmd_witness(k, cfg, sigma_text, witness_f, out);
          if (*demo) return detail::cmd_demo(k, cfg, out, err);
          return kExitUsage;
        },
        field);
  } catch (const not_enough_types& e) {
    auto p = partition_count(inst_args.d);
    err << "error: " << e.what() << " (n = " << inst_args.n << ", d = " << inst_args.d << ", p(d) = " << p << ")\n";
    return kExitUsage;
  } catch (const consistency_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace symideal::cli
