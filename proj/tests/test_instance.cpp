#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "symideal/instance.hpp"

using namespace symideal;

namespace {
RationalField Q;
Polynomial<RationalField> P(const char* text) { return parse_polynomial(text, Q); }

// Direct per-type coefficient sum, written without the collapse helper.
std::vector<Rational> sum_by_type(const Polynomial<RationalField>& p, const std::vector<Partition>& types,
                                  std::uint64_t d) {
  std::vector<Rational> out(types.size(), 0);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) continue;
    for (std::size_t i = 0; i < types.size(); ++i) {
      if (type_of(m) == types[i]) out[i] += c;
    }
  }
  return out;
}
}  // namespace

TEST(DistinctTypeMonomials, Examples) {
  auto g = distinct_type_monomials(2, 2);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].to_string(), "x1^2");
  EXPECT_EQ(g[1].to_string(), "x1*x2");
  EXPECT_EQ(distinct_type_monomials(1, 1)[0].to_string(), "x1");
  EXPECT_THROW(distinct_type_monomials(3, 2), not_enough_types);
  try {
    distinct_type_monomials(3, 2);
  } catch (const std::exception& e) {
    EXPECT_STREQ(e.what(), "n exceeds p(d) distinct types at degree d");
  }
}

TEST(DistinctTypeMonomials, DegreeAndDistinctTypes) {
  for (exponent_type d = 1; d <= 7; ++d) {
    auto g = distinct_type_monomials(partition_count(d), d);
    std::set<Partition> types;
    for (const auto& m : g) {
      EXPECT_EQ(m.degree(), d);
      types.insert(type_of(m));
    }
    EXPECT_EQ(types.size(), g.size());
  }
}

TEST(BuildInstance, IdentityMatrix) {
  auto inst = build_instance(Matrix<RationalField>::identity(Q, 2), 2);
  EXPECT_EQ(inst.generators[0], P("x1^2"));
  EXPECT_EQ(inst.generators[1], P("x1*x2"));
  EXPECT_EQ(inst.types, (std::vector<Partition>{{2}, {1, 1}}));
}

TEST(BuildInstance, AllOnesMatrix) {
  auto inst = build_instance(parse_matrix("1,1;1,1", Q), 2);
  EXPECT_EQ(inst.generators[0], P("x1^2 + x1*x2"));
  EXPECT_EQ(inst.generators[1], P("x1^2 + x1*x2"));
}

TEST(BuildInstance, HandSubstitution) {
  // f_j = sum_i c_ij g_i with g = [x1^3, x1^2*x2]
  auto inst = build_instance(parse_matrix("2,0;3,5", Q), 3);
  auto expected_f1 = 2 * Polynomial<RationalField>::monomial(Q, inst.monomials[0]) +
                     3 * Polynomial<RationalField>::monomial(Q, inst.monomials[1]);
  EXPECT_EQ(inst.generators[0], expected_f1);
  EXPECT_EQ(inst.generators[0], P("2*x1^3 + 3*x1^2*x2"));
  EXPECT_EQ(inst.generators[1], P("5*x1^2*x2"));
}

TEST(BuildInstance, ZeroColumnsKeepZeroGenerators) {
  auto inst = build_instance(parse_matrix("1,0;0,0", Q), 2);
  EXPECT_TRUE(inst.generators[1].is_zero());
  EXPECT_EQ(lower_bound_certificate(inst).rank, 1u);
}

TEST(BuildInstance, Errors) {
  EXPECT_THROW(build_instance(Matrix<RationalField>::identity(Q, 3), 2), not_enough_types);
  EXPECT_THROW(build_instance(parse_matrix("1,2", Q), 2), std::invalid_argument);
}

TEST(Collapse, StandardBasisAndColumns) {
  auto c = random_matrix_of_rank(Q, 3, 2, 9);
  auto inst = build_instance(c, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    auto e = collapse(Polynomial<RationalField>::monomial(Q, inst.monomials[i]), inst);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(e[k], k == i ? 1 : 0);
  }
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(collapse(inst.generators[j], inst), c.column(j));
    EXPECT_EQ(collapse(inst.generators[j], inst), sum_by_type(inst.generators[j], inst.types, 4));
  }
  auto shifted = Monomial::variable(5) * inst.generators[0];
  for (const auto& v : collapse(shifted, inst)) EXPECT_EQ(v, 0);
}

TEST(Collapse, MatchesDirectSummation) {
  gen::Rng rng(55);
  auto types = partitions_of(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = gen::random_polynomial(rng, Q, 8, 5, 3);
    EXPECT_EQ(collapse(p, types, 3), sum_by_type(p, types, 3));
  }
  EXPECT_THROW(collapse(P("x1"), std::vector<Partition>{{1}, {1}}, 1), std::invalid_argument);
}

TEST(Collapse, InvariantUnderPermutations) {
  gen::Rng rng(56);
  auto types = partitions_of(3);
  for (int trial = 0; trial < 500; ++trial) {
    auto p = gen::random_polynomial(rng, Q, 6, 5, 3);
    auto s = gen::random_permutation(rng, 5);
    EXPECT_EQ(collapse(apply_perm(s, p), types, 3), collapse(p, types, 3));
  }
}

TEST(Collapse, AnnihilatesShifts) {
  gen::Rng rng(57);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint64_t d = static_cast<std::uint64_t>(gen::uniform(rng, 1, 4));
    auto types = partitions_of(static_cast<exponent_type>(d));
    auto p = gen::random_homogeneous(rng, Q, d, 5, 5);
    auto u = gen::random_monomial_of_degree(rng, static_cast<std::uint64_t>(gen::uniform(rng, 1, 3)), 6);
    for (const auto& v : collapse(u * p, types, d)) EXPECT_EQ(v, 0);
  }
}

TEST(Certificate, IdentityMatrixGivesFullRank) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto cert = lower_bound_certificate(build_instance(Matrix<RationalField>::identity(Q, n), static_cast<exponent_type>(n)));
    EXPECT_EQ(cert.rank, n);
    EXPECT_NE(cert.verdict.find("at least " + std::to_string(n) + " generators"), std::string::npos);
  }
}

TEST(Certificate, AllOnesAndRandomRank) {
  EXPECT_EQ(lower_bound_certificate(build_instance(parse_matrix("1,1;1,1", Q), 2)).rank, 1u);
  for (std::size_t r = 0; r <= 3; ++r) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto c = random_matrix_of_rank(Q, 3, r, seed);
      auto cert = lower_bound_certificate(build_instance(c, 3));
      EXPECT_EQ(cert.rank, r);
      EXPECT_EQ(cert.rank, oracle_ref::minor_rank(c));
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(cert.collapse_vectors[j], c.column(j));
    }
  }
}

TEST(CandidateLowerBound, Examples) {
  auto c = random_matrix_of_rank(Q, 3, 2, 3);
  auto inst = build_instance(c, 3);
  EXPECT_EQ(candidate_lower_bound(inst.generators, inst), 2u);
  auto sigma = parse_permutation("(1 3 2)");
  auto combined = inst.generators[0] + apply_perm(sigma, inst.generators[1]);
  EXPECT_EQ(candidate_lower_bound({combined}, inst), combined.is_zero() ? 0u : 1u);
  EXPECT_EQ(candidate_lower_bound({P("0")}, inst), 0u);
  EXPECT_THROW(candidate_lower_bound<RationalField>({}, inst), std::invalid_argument);
}

TEST(CandidateLowerBound, MonotoneUnderSupersets) {
  gen::Rng rng(58);
  auto inst = build_instance(random_matrix_of_rank(Q, 3, 3, 1), 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial<RationalField>> cands;
    std::size_t previous = 0;
    for (int k = 0; k < 4; ++k) {
      cands.push_back(gen::random_homogeneous(rng, Q, 3, 4, 4));
      auto bound = candidate_lower_bound(cands, inst);
      EXPECT_GE(bound, previous);
      previous = bound;
    }
  }
}
