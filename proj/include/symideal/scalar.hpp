#pragma once

// Exact coefficient fields: arbitrary-precision rationals and prime fields F_p.
//
// A field is a small value object (RationalField, PrimeField) that manufactures
// its elements. Generic code is written against the ExactField concept and
// never mixes elements of different fields.

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "symideal/error.hpp"

namespace symideal {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Deterministic primality test for 64-bit inputs by trial division (inputs < 2^31 in practice).
constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t k = 3; k * k <= n; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

namespace detail {

inline Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw parse_error("expected an integer, got '" + std::string(text) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw parse_error("invalid digit in integer '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// The field Q. Elements are boost cpp_rational values, always in lowest terms
/// with a positive denominator.
class RationalField {
 public:
  using value_type = Rational;
  static constexpr bool has_fractions = true;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_integer(const Integer& n) const { return value_type(n); }
  value_type from_integer(long long n) const { return value_type(n); }

  value_type from_fraction(const Integer& num, const Integer& den) const {
    if (den == 0) throw parse_error("zero denominator");
    return den < 0 ? value_type(-num, -den) : value_type(num, den);
  }

  bool is_zero(const value_type& a) const { return a == 0; }
  value_type inverse(const value_type& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }

  /// "a" or "a/b".
  std::string format(const value_type& a) const {
    auto num = boost::multiprecision::numerator(a);
    auto den = boost::multiprecision::denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  value_type parse(std::string_view text) const {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_integer(detail::parse_integer(text));
    return from_fraction(detail::parse_integer(text.substr(0, slash)),
                         detail::parse_integer(text.substr(slash + 1)));
  }

  bool is_negative(const value_type& a) const { return a < 0; }
  std::string name() const { return "Q"; }
  std::string selector() const { return "q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// Element of F_p, stored as the canonical representative in [0, p) next to
/// its modulus. Binary operations require equal moduli.
class Zp {
 public:
  Zp() = default;
  Zp(std::uint64_t representative, std::uint32_t modulus)
      : value_(static_cast<std::uint32_t>(representative % modulus)), modulus_(modulus) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Zp& operator+=(const Zp& o) {
    check(o);
    std::uint64_t s = std::uint64_t(value_) + o.value_;
    value_ = static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
    return *this;
  }
  Zp& operator-=(const Zp& o) {
    check(o);
    std::uint64_t s = std::uint64_t(value_) + modulus_ - o.value_;
    value_ = static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
    return *this;
  }
  Zp& operator*=(const Zp& o) {
    check(o);
    value_ = static_cast<std::uint32_t>(std::uint64_t(value_) * o.value_ % modulus_);
    return *this;
  }
  Zp& operator/=(const Zp& o) {
    check(o);
    return *this *= o.inverse();
  }

  /// Multiplicative inverse by Fermat's little theorem.
  Zp inverse() const {
    if (value_ == 0) throw std::domain_error("inverse of zero");
    return pow(modulus_ - 2);
  }

  Zp pow(std::uint64_t e) const {
    Zp result(1, modulus_);
    Zp base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      base *= base;
      e >>= 1U;
    }
    return result;
  }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend Zp operator-(const Zp& a) { return Zp(0, a.modulus_) - a; }

  friend bool operator==(const Zp&, const Zp&) = default;
  // Representation order, used only for canonical container keys.
  friend auto operator<=>(const Zp&, const Zp&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.value_; }

 private:
  void check(const Zp& o) const {
    if (o.modulus_ != modulus_) throw std::invalid_argument("mixed prime-field moduli");
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 2;
};

/// The field F_p for a prime p < 2^31.
class PrimeField {
 public:
  using value_type = Zp;
  static constexpr bool has_fractions = false;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1U << 31)) {
      throw std::invalid_argument("field modulus must be a prime below 2^31, got " + std::to_string(p));
    }
  }

  std::uint32_t modulus() const noexcept { return p_; }

  value_type zero() const { return Zp(0, p_); }
  value_type one() const { return Zp(1, p_); }
  value_type from_integer(const Integer& n) const {
    Integer r = n % p_;
    if (r < 0) r += p_;
    return Zp(static_cast<std::uint64_t>(r), p_);
  }
  value_type from_integer(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Zp(static_cast<std::uint64_t>(r), p_);
  }
  value_type from_fraction(const Integer& num, const Integer& den) const {
    value_type d = from_integer(den);
    if (d.is_zero()) throw parse_error("denominator vanishes modulo " + std::to_string(p_));
    return from_integer(num) / d;
  }

  bool is_zero(const value_type& a) const { return a.is_zero(); }
  value_type inverse(const value_type& a) const { return a.inverse(); }

  std::string format(const value_type& a) const { return std::to_string(a.value()); }

  value_type parse(std::string_view text) const {
    if (text.find('/') != std::string_view::npos) {
      throw parse_error("fractions are not accepted over F_" + std::to_string(p_));
    }
    return from_integer(detail::parse_integer(text));
  }

  bool is_negative(const value_type&) const { return false; }
  std::string name() const { return "F_" + std::to_string(p_); }
  std::string selector() const { return "p=" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

template <class F>
concept ExactField = std::copy_constructible<F> && std::equality_comparable<F> &&
    requires(const F& field, const typename F::value_type& a, const Integer& n, std::string_view text) {
      { field.zero() } -> std::same_as<typename F::value_type>;
      { field.one() } -> std::same_as<typename F::value_type>;
      { field.from_integer(n) } -> std::same_as<typename F::value_type>;
      { field.from_fraction(n, n) } -> std::same_as<typename F::value_type>;
      { field.is_zero(a) } -> std::same_as<bool>;
      { field.inverse(a) } -> std::same_as<typename F::value_type>;
      { field.format(a) } -> std::same_as<std::string>;
      { field.parse(text) } -> std::same_as<typename F::value_type>;
      { field.name() } -> std::same_as<std::string>;
      { a + a } -> std::convertible_to<typename F::value_type>;
      { a - a } -> std::convertible_to<typename F::value_type>;
      { a * a } -> std::convertible_to<typename F::value_type>;
      { -a } -> std::convertible_to<typename F::value_type>;
      { a == a } -> std::convertible_to<bool>;
      { a < a } -> std::convertible_to<bool>;
    };

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

}  // namespace symideal
