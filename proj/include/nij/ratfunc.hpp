#pragma once

#include <map>
#include <string>

#include "nij/multipoly.hpp"

namespace nij {

// Exact multivariate rational function: num/den with gcd(num, den) = 1 and
// den monic in grlex order. The universal scalar of the toolkit.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT: Scalar(1) etc.
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(MultiPoly num, MultiPoly den);
  static RationalFunction var(Symbol s) { return RationalFunction(MultiPoly::var(s)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;

  bool depends_on(Symbol s) const { return num_.depends_on(s) || den_.depends_on(s); }
  std::vector<Symbol> variables() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  RationalFunction partial(Symbol s) const;
  // Errors with UnknownSymbol when the name was never interned.
  RationalFunction partial(const std::string& symbol_name) const;

  // Exact evaluation; throws PoleError when den vanishes at the point.
  Rational eval(const std::map<Symbol, Rational>& point) const;
  double eval_double(const std::map<Symbol, double>& point) const;

  RationalFunction subst(Symbol s, const RationalFunction& value) const;

  std::string str() const;

 private:
  void reduce();
  MultiPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace nij
