#pragma once

// Sparse polynomials in x_1, x_2, ... over an exact field.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symideal/error.hpp"
#include "symideal/monomial.hpp"
#include "symideal/permutation.hpp"
#include "symideal/scalar.hpp"

namespace symideal {

/// Finite sum of monomials with nonzero coefficients in one field. Terms are
/// kept in graded order (degree ascending, then lexicographic), which is also
/// the print order.
template <ExactField F>
class Polynomial {
 public:
  using field_type = F;
  using value_type = typename F::value_type;
  using term_map = std::map<Monomial, value_type>;

  explicit Polynomial(F field) : field_(std::move(field)) {}

  Polynomial(F field, const Monomial& m, const value_type& c) : field_(std::move(field)) { add_term(m, c); }

  static Polynomial constant(F field, const value_type& c) { return Polynomial(field, Monomial::one(), c); }
  static Polynomial monomial(F field, const Monomial& m) {
    auto one = field.one();
    return Polynomial(std::move(field), m, one);
  }

  const F& field() const noexcept { return field_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  value_type coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Largest monomial degree; empty for the zero polynomial.
  std::optional<std::uint64_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }
  std::optional<std::uint64_t> min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
  }
  bool is_homogeneous() const { return !terms_.empty() && *degree() == *min_degree(); }

  /// Sorted distinct variable indices occurring in the polynomial.
  std::vector<index_type> indices() const {
    std::set<index_type> s;
    for (const auto& [m, c] : terms_) {
      for (auto [i, e] : m.entries()) s.insert(i);
    }
    return {s.begin(), s.end()};
  }
  index_type max_index() const {
    index_type n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.max_index());
    return n;
  }

  /// Adds c·m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const value_type& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_field(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_field(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const value_type& c) {
    if (field_.is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v = v * c;
    return *this;
  }

  /// this += c · u · p, the inner step of every elimination over polynomials.
  void add_scaled(const value_type& c, const Monomial& u, const Polynomial& p) {
    check_field(p);
    if (field_.is_zero(c)) return;
    for (const auto& [m, v] : p.terms_) add_term(u * m, c * v);
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= -a.field_.one(); }
  friend Polynomial operator*(Polynomial a, const value_type& c) { return a *= c; }
  friend Polynomial operator*(const value_type& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Monomial& u, const Polynomial& p) {
    Polynomial out(p.field_);
    for (const auto& [m, v] : p.terms_) out.terms_.emplace(u * m, v);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_field(b);
    Polynomial out(a.field_);
    for (const auto& [m, v] : a.terms_) out.add_scaled(v, m, b);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }
  /// Canonical order on the sorted-term representation (for deduplication).
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

  /// Text in the input grammar, e.g. "-1/2*x3 + 3*x1^2*x2"; "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool negative = field_.is_negative(c);
      value_type magnitude = negative ? value_type(-c) : c;
      if (first) {
        if (negative) s += '-';
      } else {
        s += negative ? " - " : " + ";
      }
      first = false;
      std::string coef = field_.format(magnitude);
      if (m.is_one()) {
        s += coef;
      } else {
        if (coef != "1") s += coef + "*";
        s += m.to_string();
      }
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void check_field(const Polynomial& o) const {
    if (!(o.field_ == field_)) throw std::invalid_argument("polynomials over different fields");
  }

  F field_;
  term_map terms_;
};

/// Sum of the terms of exact degree d.
template <ExactField F>
Polynomial<F> graded_part(const Polynomial<F>& p, std::uint64_t d) {
  Polynomial<F> out(p.field());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == d) out.add_term(m, c);
  }
  return out;
}

/// Coefficient of the monomial 1.
template <ExactField F>
typename F::value_type constant_term(const Polynomial<F>& s) {
  return s.coefficient(Monomial::one());
}

/// Relabels every monomial through σ; linear in p.
template <ExactField F>
Polynomial<F> apply_perm(const Permutation& sigma, const Polynomial<F>& p) {
  Polynomial<F> out(p.field());
  for (const auto& [m, c] : p.terms()) out.add_term(apply_perm(sigma, m), c);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
//
//   poly   := term (("+"|"-") term)* | "0"
//   term   := [coef "*"] factor ("*" factor)* | coef
//   factor := "x" index ["^" exponent]
//   coef   := integer | integer "/" integer
//
// Whitespace is ignored; a leading sign is accepted.
// ---------------------------------------------------------------------------

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }
  }

  template <ExactField F>
  Polynomial<F> parse(const F& field) {
    if (text_.empty()) throw parse_error("empty polynomial text");
    Polynomial<F> out(field);
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = text_[pos_++] == '-';
    for (;;) {
      auto [m, c] = term(field);
      out.add_term(m, negative ? field.zero() - c : c);
      if (pos_ == text_.size()) break;
      char op = text_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error(why + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::uint32_t small_number() {
    std::string d = digits();
    if (d.size() > 10) fail("number out of range");
    std::uint64_t v = std::stoull(d);
    if (v > 0xFFFFFFFFULL) fail("number out of range");
    return static_cast<std::uint32_t>(v);
  }

  template <ExactField F>
  std::pair<Monomial, typename F::value_type> term(const F& field) {
    auto coef = field.one();
    Monomial m;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        if constexpr (!F::has_fractions) fail("fractions are not accepted over " + field.name());
        ++pos_;
        std::string den = digits();
        coef = field.from_fraction(parse_integer(num), parse_integer(den));
      } else {
        coef = field.from_integer(parse_integer(num));
      }
      if (peek() != '*') return {m, coef};
      ++pos_;
    }
    while (need_factor) {
      if (peek() != 'x') fail("expected a factor 'x<index>'");
      ++pos_;
      index_type i = small_number();
      if (i == 0) fail("variable indices start at 1");
      exponent_type e = 1;
      if (peek() == '^') {
        ++pos_;
        e = small_number();
      }
      m = m * Monomial::variable(i, e);
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return {m, coef};
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <ExactField F>
Polynomial<F> parse_polynomial(std::string_view text, const F& field) {
  return detail::PolyParser(text).parse(field);
}

}  // namespace symideal
