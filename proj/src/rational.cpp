#include "nij/rational.hpp"

#include <ostream>

namespace nij {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw Error("cannot parse rational '" + text + "'");
  if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpq_class r(1);
  mpq_class base = v_;
  unsigned k = e;
  while (k > 0) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return Rational(std::move(r));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nij
