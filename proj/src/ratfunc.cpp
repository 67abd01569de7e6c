#include "nij/ratfunc.hpp"

#include <algorithm>
#include <ostream>

#include "nij/errors.hpp"

namespace nij {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (!den_.is_one()) {
    MultiPoly g = MultiPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *MultiPoly::divide_exact(num_, g);
      den_ = *MultiPoly::divide_exact(den_, g);
    }
  }
  const Rational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num_.mul_coeff(inv);
    den_.mul_coeff(inv);
  }
}

Rational RationalFunction::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

std::vector<Symbol> RationalFunction::variables() const {
  std::vector<Symbol> v = num_.variables(), w = den_.variables();
  v.insert(v.end(), w.begin(), w.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  // a/b + c/d with g = gcd(b, d): keeps the gcd inputs small.
  MultiPoly g = MultiPoly::gcd(den_, o.den_);
  MultiPoly b1 = *MultiPoly::divide_exact(den_, g);
  MultiPoly d1 = *MultiPoly::divide_exact(o.den_, g);
  MultiPoly t = num_ * d1 + o.num_ * b1;
  num_ = std::move(t);
  den_ = den_ * d1;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  MultiPoly g1 = MultiPoly::gcd(num_, o.den_);
  MultiPoly g2 = MultiPoly::gcd(o.num_, den_);
  MultiPoly a = g1.is_one() ? num_ : *MultiPoly::divide_exact(num_, g1);
  MultiPoly d = g1.is_one() ? o.den_ : *MultiPoly::divide_exact(o.den_, g1);
  MultiPoly c = g2.is_one() ? o.num_ : *MultiPoly::divide_exact(o.num_, g2);
  MultiPoly b = g2.is_one() ? den_ : *MultiPoly::divide_exact(den_, g2);
  num_ = a * c;
  den_ = b * d;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  return *this *= o.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  r.reduce();
  return r;
}

RationalFunction RationalFunction::pow(long e) const {
  if (e == 0) return RationalFunction(1);
  RationalFunction base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RationalFunction r(1);
  while (k > 0) {
    if (k & 1ul) r *= base;
    base *= base;
    k >>= 1ul;
  }
  return r;
}

RationalFunction RationalFunction::partial(Symbol s) const {
  if (!depends_on(s)) return RationalFunction();
  MultiPoly dn = num_.derivative(s);
  if (den_.is_one()) return RationalFunction(std::move(dn));
  MultiPoly dd = den_.derivative(s);
  // (n' d - n d') / d^2
  return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

RationalFunction RationalFunction::partial(const std::string& symbol_name) const {
  auto s = Symbol::lookup(symbol_name);
  if (!s) throw UnknownSymbol(symbol_name);
  return partial(*s);
}

Rational RationalFunction::eval(const std::map<Symbol, Rational>& point) const {
  Rational d = den_.eval(point);
  if (d.is_zero()) throw PoleError("pole: denominator vanishes at the evaluation point");
  return num_.eval(point) / d;
}

double RationalFunction::eval_double(const std::map<Symbol, double>& point) const {
  return num_.eval_double(point) / den_.eval_double(point);
}

RationalFunction RationalFunction::subst(Symbol s, const RationalFunction& value) const {
  if (!depends_on(s)) return *this;
  auto apply = [&](const MultiPoly& p) {
    auto cs = p.coeffs_in(s);
    RationalFunction acc(cs.back());
    for (size_t i = cs.size() - 1; i-- > 0;) acc = acc * value + RationalFunction(cs[i]);
    return acc;
  };
  RationalFunction n = apply(num_);
  if (den_.is_one()) return n;
  RationalFunction d = apply(den_);
  return n / d;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
  return n + "/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.str();
}

}  // namespace nij
