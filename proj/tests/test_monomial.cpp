#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "symideal/monomial.hpp"
#include "symideal/permutation.hpp"

using namespace symideal;

namespace {

// Expands a multiset to its element list, counts each distinct element, sorts.
std::vector<exponent_type> type_by_counting(const Multiset& m) {
  std::vector<index_type> elements;
  for (auto [i, e] : m.entries()) elements.insert(elements.end(), e, i);
  std::vector<index_type> distinct = elements;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<exponent_type> counts;
  for (auto i : distinct) counts.push_back(static_cast<exponent_type>(std::count(elements.begin(), elements.end(), i)));
  std::sort(counts.begin(), counts.end());
  std::reverse(counts.begin(), counts.end());
  return counts;
}

}  // namespace

TEST(TypeOf, WorkedExample) {
  std::vector<index_type> elements{1, 1, 1, 2, 3, 3};
  auto m = Multiset::from_elements(elements);
  EXPECT_EQ(type_of(m), (Partition{3, 2, 1}));
  EXPECT_EQ(type_of(Multiset{{1, 3}, {2, 1}, {3, 2}}), (Partition{3, 2, 1}));
}

TEST(TypeOf, Empty) { EXPECT_EQ(type_of(Multiset()), Partition()); }

TEST(TypeOf, TiesAndGaps) {
  Multiset m{{4, 2}, {9, 2}, {1, 1}};
  EXPECT_EQ(type_of(m), (Partition{2, 2, 1}));
  const auto t = type_of(m);
  EXPECT_EQ(std::vector<exponent_type>(t.parts().begin(), t.parts().end()), type_by_counting(m));
}

TEST(TypeOf, AgreesWithCountingOracle) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Multiset m(gen::random_counts(rng, 9, 6, 4));
    const auto t = type_of(m);
    EXPECT_EQ(std::vector<exponent_type>(t.parts().begin(), t.parts().end()), type_by_counting(m));
  }
}

TEST(Multiset, ZeroMultiplicitiesAreDropped) {
  Multiset m(std::map<index_type, exponent_type>{{1, 0}, {2, 3}});
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.multiplicity(1), 0u);
  EXPECT_EQ(m.multiplicity(2), 3u);
  EXPECT_THROW(Multiset({{0, 1}}), std::invalid_argument);
}

TEST(Bijection, MultisetToMonomial) {
  Multiset m{{1, 3}, {2, 1}, {3, 2}};
  EXPECT_EQ(multiset_to_monomial(m).to_string(), "x1^3*x2*x3^2");
  EXPECT_TRUE(multiset_to_monomial(Multiset()).is_one());
  EXPECT_EQ(monomial_to_multiset(Monomial::one()), Multiset());
}

TEST(Bijection, RoundTripProperty) {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    Multiset m(gen::random_counts(rng, 12, 6, 5));
    auto mono = multiset_to_monomial(m);
    EXPECT_EQ(monomial_to_multiset(mono), m);
    EXPECT_EQ(multiset_to_monomial(monomial_to_multiset(mono)), mono);
    EXPECT_EQ(type_of(mono), type_of(m));
  }
}

TEST(CanonicalMonomial, Convention) {
  EXPECT_EQ(canonical_monomial(Partition{3, 2, 1}).to_string(), "x1^3*x2^2*x3");
  EXPECT_TRUE(canonical_monomial(Partition()).is_one());
  EXPECT_EQ(canonical_monomial(Partition{2, 2}).to_string(), "x1^2*x2^2");
  EXPECT_EQ(type_of(canonical_monomial(Partition{4, 1, 1})), (Partition{4, 1, 1}));
}

TEST(Partition, RejectsInvalidParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_EQ((Partition{3, 1}).to_string(), "(3,1)");
  EXPECT_EQ((Partition{3, 1}).weight(), 4u);
}

TEST(Monomial, GradedOrderAndProduct) {
  auto x1 = Monomial::variable(1);
  auto x2 = Monomial::variable(2);
  EXPECT_LT(Monomial::one(), x2);
  EXPECT_LT(x1, x2);
  EXPECT_LT(x2, x1 * x1);
  EXPECT_EQ((x1 * x2 * x1).to_string(), "x1^2*x2");
  EXPECT_EQ((x1 * x2 * x1).degree(), 3u);
}

TEST(OrbitCharacterization, SortingPermutationReachesCanonicalRepresentative) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    auto m = gen::random_monomial(rng, 10, 5, 4);
    auto sigma = sorting_permutation(m);
    EXPECT_EQ(apply_perm(sigma, canonical_monomial(type_of(m))), m) << m;
  }
}
