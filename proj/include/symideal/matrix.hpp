#pragma once

// Dense matrices over an exact field and exact rank.

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symideal/error.hpp"
#include "symideal/scalar.hpp"

namespace symideal {

template <ExactField F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  }

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Columns given as vectors of equal length.
  static Matrix from_columns(F field, std::size_t rows, const std::vector<std::vector<value_type>>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<value_type> column(std::size_t j) const {
    std::vector<value_type> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  bool is_square() const noexcept { return rows_ == cols_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.field_.is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Matrix text format: rows separated by ';', entries by ','.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ';';
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ',';
        s += field_.format((*this)(i, j));
      }
    }
    return s;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// Parses "1,0;0,1"; rational entries "a/b" are accepted over Q.
template <ExactField F>
Matrix<F> parse_matrix(std::string_view text, const F& field) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact += c;
  }
  if (compact.empty()) throw parse_error("empty matrix text");
  std::vector<std::vector<typename F::value_type>> rows;
  std::size_t start = 0;
  for (;;) {
    auto end = compact.find(';', start);
    std::string row = compact.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::vector<typename F::value_type> entries;
    std::size_t p = 0;
    for (;;) {
      auto comma = row.find(',', p);
      std::string entry = row.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
      if (entry.empty()) throw parse_error("empty matrix entry in '" + std::string(text) + "'");
      entries.push_back(field.parse(entry));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    if (!rows.empty() && rows.front().size() != entries.size()) {
      throw parse_error("ragged matrix rows in '" + std::string(text) + "'");
    }
    rows.push_back(std::move(entries));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  Matrix<F> m(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Rank
// ---------------------------------------------------------------------------

/// Gaussian elimination over any exact field.
template <ExactField F>
std::size_t echelon_rank(const Matrix<F>& input) {
  const auto& field = input.field();
  std::vector<std::vector<typename F::value_type>> a(input.rows());
  for (std::size_t i = 0; i < input.rows(); ++i) {
    for (std::size_t j = 0; j < input.cols(); ++j) a[i].push_back(input(i, j));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < input.cols() && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && field.is_zero(a[pivot][c])) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    auto inv = field.inverse(a[rank][c]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (field.is_zero(a[i][c])) continue;
      typename F::value_type factor = a[i][c] * inv;
      for (std::size_t j = c; j < input.cols(); ++j) a[i][j] = a[i][j] - factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Fraction-free (Bareiss) elimination over Z. Every intermediate entry is a
/// minor of the input, so each division below is exact.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer numerator = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        Integer quotient, remainder;
        boost::multiprecision::divide_qr(numerator, previous, quotient, remainder);
        if (remainder != 0) throw consistency_error("inexact Bareiss division");
        a[i][j] = std::move(quotient);
      }
      a[i][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Exact rank over Q: each row is scaled by the lcm of its denominators, then
/// eliminated fraction-free.
inline std::size_t rank(const Matrix<RationalField>& m) {
  std::vector<std::vector<Integer>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(m(i, j))));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& v = m(i, j);
      a[i].push_back(boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v)));
    }
  }
  return bareiss_rank(std::move(a));
}

inline std::size_t rank(const Matrix<PrimeField>& m) { return echelon_rank(m); }

/// Dimension of the span of equal-length vectors; 0 for an empty list.
template <ExactField F>
std::size_t span_dimension(const F& field, std::size_t length, const std::vector<std::vector<typename F::value_type>>& vectors) {
  if (vectors.empty() || length == 0) return 0;
  return rank(Matrix<F>::from_columns(field, length, vectors));
}

// ---------------------------------------------------------------------------
// Seeded instances
// ---------------------------------------------------------------------------

namespace detail {

/// Uniform integer in [lo, hi] by rejection; reproducible across standard libraries.
inline long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<long long>(draw % span);
}

}  // namespace detail

inline constexpr long long kRandomEntryBound = 3;
inline constexpr int kRandomRankRetries = 1000;

/// A·B with A n×r, B r×n drawn from [-3, 3], resampled until the product has
/// rank exactly r. Deterministic in the seed.
template <ExactField F>
Matrix<F> random_matrix_of_rank(const F& field, std::size_t n, std::size_t r, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("matrix size must be positive");
  if (r > n) throw std::invalid_argument("target rank exceeds matrix size");
  if (r == 0) return Matrix<F>(field, n, n);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRandomRankRetries; ++attempt) {
    Matrix<F> a(field, n, r);
    Matrix<F> b(field, r, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < r; ++k) {
        a(i, k) = field.from_integer(detail::uniform_int(rng, -kRandomEntryBound, kRandomEntryBound));
      }
    }
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        b(k, j) = field.from_integer(detail::uniform_int(rng, -kRandomEntryBound, kRandomEntryBound));
      }
    }
    Matrix<F> c = a * b;
    if (rank(c) == r) return c;
  }
  throw std::runtime_error("could not sample a matrix of the requested rank");
}

}  // namespace symideal
