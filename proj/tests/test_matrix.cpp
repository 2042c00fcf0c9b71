#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "symideal/matrix.hpp"

using namespace symideal;

namespace {
RationalField Q;

template <ExactField F>
Matrix<F> random_small_matrix(gen::Rng& rng, const F& field, std::size_t rows, std::size_t cols, long long bound) {
  Matrix<F> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_integer(gen::uniform(rng, -bound, bound));
  }
  return m;
}
}  // namespace

TEST(MatrixText, ParseAndPrint) {
  auto m = parse_matrix("1,0;0,1", Q);
  EXPECT_EQ(m, Matrix<RationalField>::identity(Q, 2));
  auto r = parse_matrix(" 1/2, -3 ; 4,0 ", Q);
  EXPECT_EQ(r.to_string(), "1/2,-3;4,0");
  EXPECT_EQ(parse_matrix(r.to_string(), Q), r);
  EXPECT_EQ(parse_matrix("8,-1", PrimeField(7)).to_string(), "1,6");
  EXPECT_THROW(parse_matrix("1,0;1", Q), parse_error);
  EXPECT_THROW(parse_matrix("1,,0", Q), parse_error);
  EXPECT_THROW(parse_matrix("", Q), parse_error);
  EXPECT_THROW(parse_matrix("1/2", PrimeField(7)), parse_error);
}

TEST(Rank, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(rank(Matrix<RationalField>::identity(Q, n)), n);
  EXPECT_EQ(rank(parse_matrix("1,1;1,1", Q)), 1u);
  EXPECT_EQ(rank(parse_matrix("0,0;0,0", Q)), 0u);
  EXPECT_EQ(rank(parse_matrix("1/2,1/3;3,2", Q)), 1u);
  EXPECT_EQ(rank(parse_matrix("1,2,3;4,5,6", Q)), 2u);
  EXPECT_EQ(rank(parse_matrix("0,1,2;0,2,4;0,0,1", Q)), 2u);
  // Nonsingular over Q, singular mod 7.
  EXPECT_EQ(rank(parse_matrix("1,2;3,13", Q)), 2u);
  EXPECT_EQ(rank(parse_matrix("1,2;3,13", PrimeField(7))), 1u);
}

TEST(Rank, AgreesWithMinorOracleOverQ) {
  gen::Rng rng(2718);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t rows = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    std::size_t cols = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    auto m = random_small_matrix(rng, Q, rows, cols, 5);
    // Bias towards rank deficiency by duplicating a scaled row.
    if (rows > 1 && trial % 3 == 0) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 2;
    }
    EXPECT_EQ(rank(m), oracle_ref::minor_rank(m)) << m.to_string();
  }
}

TEST(Rank, AgreesWithMinorOracleOverPrimeFields) {
  gen::Rng rng(1618);
  for (std::uint32_t p : {2u, 3u, 7u, 101u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 150; ++trial) {
      auto m = random_small_matrix(rng, f, 4, 4, 5);
      EXPECT_EQ(rank(m), oracle_ref::minor_rank(m)) << m.to_string() << " mod " << p;
    }
  }
}

TEST(Rank, RationalEntriesMatchGaussianElimination) {
  gen::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix<RationalField> m(Q, 4, 5);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = gen::random_scalar(rng, Q);
    }
    if (trial % 2 == 0) {
      for (std::size_t j = 0; j < 5; ++j) m(3, j) = m(0, j) - m(1, j) / 3;
    }
    EXPECT_EQ(rank(m), echelon_rank(m));
  }
}

TEST(Rank, ModularConsistencyWithThreePrimes) {
  // Small entries keep every minor below these primes, so ranks coincide.
  gen::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_small_matrix(rng, Q, 4, 4, 5);
    std::size_t rq = rank(m);
    for (std::uint32_t p : {1000003u, 998244353u, 2147483647u}) {
      PrimeField f(p);
      Matrix<PrimeField> mp(f, 4, 4);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) mp(i, j) = f.from_integer(Integer(boost::multiprecision::numerator(m(i, j))));
      }
      EXPECT_EQ(rank(mp), rq);
    }
  }
}

TEST(RandomMatrixOfRank, HitsTargetRankDeterministically) {
  EXPECT_EQ(rank(random_matrix_of_rank(Q, 4, 0, 5)), 0u);
  EXPECT_EQ(random_matrix_of_rank(Q, 3, 0, 1), Matrix<RationalField>(Q, 3, 3));
  auto m = random_matrix_of_rank(Q, 3, 2, 42);
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(oracle_ref::minor_rank(m), 2u);
  EXPECT_EQ(random_matrix_of_rank(Q, 3, 2, 42), m);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EXPECT_EQ(rank(random_matrix_of_rank(Q, n, r, seed)), r);
        EXPECT_EQ(rank(random_matrix_of_rank(PrimeField(7), n, r, seed)), r);
      }
    }
  }
  EXPECT_THROW(random_matrix_of_rank(Q, 2, 3, 0), std::invalid_argument);
}

TEST(Matrix, ProductAndColumns) {
  auto a = parse_matrix("1,2;3,4", Q);
  auto b = parse_matrix("0,1;1,0", Q);
  EXPECT_EQ(a * b, parse_matrix("2,1;4,3", Q));
  EXPECT_EQ(a.column(1), (std::vector<Rational>{2, 4}));
  EXPECT_THROW(a * parse_matrix("1,2,3", Q), std::invalid_argument);
  EXPECT_THROW(Matrix<RationalField>(Q, 0, 2), std::invalid_argument);
}
