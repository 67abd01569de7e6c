#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nij/rational.hpp"
#include "nij/symbol.hpp"

namespace nij {

// Power product of symbols, stored sparsely as (symbol, exponent) pairs
// sorted by symbol id with all exponents positive.
class Monomial {
 public:
  using Factor = std::pair<Symbol, uint32_t>;

  Monomial() = default;
  static Monomial var(Symbol s, uint32_t e = 1);

  bool is_one() const { return factors_.empty(); }
  uint32_t total_degree() const;
  uint32_t degree_in(Symbol s) const;
  const std::vector<Factor>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  // Componentwise quotient; nullopt when some exponent would go negative.
  std::optional<Monomial> divide(const Monomial& o) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Graded lexicographic order (total degree first, then lex with smaller
  // symbol ids ranked as earlier variables). Returns <0, 0, >0.
  static int cmp(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; }

  std::string str() const;

 private:
  std::vector<Factor> factors_;
};

// Sparse multivariate polynomial over Rational. Canonical form: no zero
// coefficients, terms keyed by monomial in grlex order, so equality is
// representational equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  explicit MultiPoly(const Rational& c);
  static MultiPoly var(Symbol s, uint32_t e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const { return is_constant() && constant_value().is_one(); }
  // Value as a constant; zero polynomial yields 0. Requires is_constant().
  Rational constant_value() const;

  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  // Leading term in grlex order.
  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  uint32_t total_degree() const;
  uint32_t degree_in(Symbol s) const;
  bool depends_on(Symbol s) const { return degree_in(s) > 0; }
  std::vector<Symbol> variables() const;  // sorted, present symbols

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& mul_coeff(const Rational& c);
  MultiPoly pow(uint32_t e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Exact polynomial quotient; nullopt when the division is not exact.
  static std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

  // GCD, normalized monic (leading coefficient 1); gcd(0,0) = 0.
  static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

  MultiPoly derivative(Symbol s) const;

  // Dense coefficient list in powers of s (ascending); size = deg_s + 1.
  std::vector<MultiPoly> coeffs_in(Symbol s) const;
  static MultiPoly from_coeffs(const std::vector<MultiPoly>& coeffs, Symbol s);

  Rational eval(const std::map<Symbol, Rational>& point) const;
  double eval_double(const std::map<Symbol, double>& point) const;

  // Replace s by a polynomial value.
  MultiPoly subst(Symbol s, const MultiPoly& value) const;

  void add_term(const Monomial& m, const Rational& c);

  std::string str() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace nij
