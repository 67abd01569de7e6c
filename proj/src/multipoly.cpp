#include "nij/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "nij/errors.hpp"

namespace nij {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(Symbol s, uint32_t e) {
  Monomial m;
  if (e > 0) m.factors_.push_back({s, e});
  return m;
}

uint32_t Monomial::total_degree() const {
  uint32_t d = 0;
  for (const auto& [s, e] : factors_) d += e;
  return d;
}

uint32_t Monomial::degree_in(Symbol s) const {
  for (const auto& [v, e] : factors_)
    if (v == s) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first < o.factors_[j].first) {
      r.factors_.push_back(factors_[i++]);
    } else if (o.factors_[j].first < factors_[i].first) {
      r.factors_.push_back(o.factors_[j++]);
    } else {
      r.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
      ++i, ++j;
    }
  }
  for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
  for (; j < o.factors_.size(); ++j) r.factors_.push_back(o.factors_[j]);
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
  Monomial r;
  size_t i = 0;
  for (const auto& [s, e] : o.factors_) {
    while (i < factors_.size() && factors_[i].first < s) r.factors_.push_back(factors_[i++]);
    if (i == factors_.size() || factors_[i].first != s || factors_[i].second < e)
      return std::nullopt;
    if (factors_[i].second > e) r.factors_.push_back({s, factors_[i].second - e});
    ++i;
  }
  for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].first < b.factors_[j].first) {
      ++i;
    } else if (b.factors_[j].first < a.factors_[i].first) {
      ++j;
    } else {
      r.factors_.push_back({a.factors_[i].first,
                            std::min(a.factors_[i].second, b.factors_[j].second)});
      ++i, ++j;
    }
  }
  return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // lex on exponent vectors; smaller symbol id = earlier variable
  size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].first < b.factors_[j].first) return 1;
    if (b.factors_[j].first < a.factors_[i].first) return -1;
    if (a.factors_[i].second != b.factors_[j].second)
      return a.factors_[i].second > b.factors_[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < a.factors_.size()) return 1;
  if (j < b.factors_.size()) return -1;
  return 0;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, e] : factors_) {
    if (!first) os << "*";
    first = false;
    os << s.name();
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

MultiPoly MultiPoly::var(Symbol s, uint32_t e) {
  MultiPoly p;
  p.terms_.emplace(Monomial::var(s, e), Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

const Monomial& MultiPoly::leading_monomial() const {
  static const Monomial kOne;
  if (terms_.empty()) return kOne;
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
  static const Rational kZero(0);
  if (terms_.empty()) return kZero;
  return terms_.rbegin()->second;
}

uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

uint32_t MultiPoly::degree_in(Symbol s) const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(s));
  return d;
}

std::vector<Symbol> MultiPoly::variables() const {
  std::vector<Symbol> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, e] : m.factors()) out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::mul_coeff(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
  MultiPoly r(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    if (e >>= 1u) base *= base;
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return MultiPoly();
  if (b.is_constant()) {
    MultiPoly q = a;
    q.mul_coeff(b.constant_value().inverse());
    return q;
  }
  MultiPoly r = a, q;
  const Monomial& lmb = b.leading_monomial();
  const Rational& lcb = b.leading_coeff();
  while (!r.is_zero()) {
    auto mq = r.leading_monomial().divide(lmb);
    if (!mq) return std::nullopt;
    Rational cq = r.leading_coeff() / lcb;
    q.add_term(*mq, cq);
    MultiPoly t;
    t.terms_.emplace(*mq, cq);
    r -= t * b;
  }
  return q;
}

namespace {

// Pseudo-remainder of dense univariate views (coefficients in MultiPoly):
// lc(b)^(deg a - deg b + 1) * a = q*b + rem.
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
  const size_t db = b.size() - 1;
  const MultiPoly& lb = b.back();
  long e = static_cast<long>(a.size() - 1) - static_cast<long>(db) + 1;
  while (a.size() - 1 >= db && !(a.size() == 1 && a[0].is_zero())) {
    size_t da = a.size() - 1;
    MultiPoly la = a.back();
    for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] * lb;
    for (size_t i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
    --e;
    if (a.size() == 1 && a[0].is_zero()) break;
    if (a.size() - 1 < db) break;
  }
  for (; e > 0; --e)
    for (auto& c : a) c = c * lb;
  return a;
}

MultiPoly exact_div_or_throw(const MultiPoly& a, const MultiPoly& b) {
  auto q = MultiPoly::divide_exact(a, b);
  if (!q) throw Error("internal: inexact division in subresultant PRS");
  return *q;
}

// ---- heuristic gcd with verified reconstruction (fallback: subresultant) --

mpz_class den_lcm(const MultiPoly& p) {
  mpz_class l(1);
  for (const auto& [m, c] : p.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  return l;
}

mpz_class max_norm(const MultiPoly& p) {
  mpz_class mx(0);
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = abs(c.numerator());
    if (a > mx) mx = a;
  }
  return mx;
}

// Integer-coefficient primitive part, leading coefficient positive.
MultiPoly int_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g(0);
  for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
  if (p.leading_coeff().sign() < 0) g = -g;
  MultiPoly q = p;
  q.mul_coeff(Rational(mpq_class(mpq_class(1) / mpq_class(g))));
  return q;
}

MultiPoly eval_at_int(const MultiPoly& p, Symbol v, const mpz_class& xi) {
  auto cs = p.coeffs_in(v);
  MultiPoly acc = cs.back();
  Rational x{mpq_class(xi)};
  for (size_t i = cs.size() - 1; i-- > 0;) {
    acc.mul_coeff(x);
    acc += cs[i];
  }
  return acc;
}

// Balanced xi-adic digit: each integer coefficient reduced into (-xi/2, xi/2].
MultiPoly balanced_digit(const MultiPoly& p, const mpz_class& xi) {
  MultiPoly d;
  for (const auto& [m, c] : p.terms()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.numerator().get_mpz_t(), xi.get_mpz_t());
    if (r * 2 > xi) r -= xi;
    if (r != 0) d.add_term(m, Rational(mpq_class(r)));
  }
  return d;
}

MultiPoly shift_down(const MultiPoly& p, const MultiPoly& digit, const mpz_class& xi) {
  MultiPoly q = p - digit;
  Rational inv{mpq_class(mpq_class(1) / mpq_class(xi))};
  q.mul_coeff(inv);
  return q;
}

// GCDHEU on integer-coefficient polynomials; result is an integer-primitive
// gcd or nullopt when the heuristic fails to verify.
std::optional<MultiPoly> heu_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() && b.is_constant()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.constant_value().numerator().get_mpz_t(),
            b.constant_value().numerator().get_mpz_t());
    return MultiPoly(Rational(mpq_class(g)));
  }
  std::vector<Symbol> vars = a.variables();
  {
    std::vector<Symbol> vb = b.variables();
    vars.insert(vars.end(), vb.begin(), vb.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  }
  Symbol v = vars.front();
  mpz_class na = max_norm(a), nb = max_norm(b);
  mpz_class xi = 2 * (na < nb ? na : nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    MultiPoly ax = eval_at_int(a, v, xi);
    MultiPoly bx = eval_at_int(b, v, xi);
    if (!ax.is_zero() && !bx.is_zero()) {
      auto gamma = heu_gcd(ax, bx);
      if (gamma && !gamma->is_zero()) {
        MultiPoly g = *gamma, cand;
        uint32_t e = 0;
        while (!g.is_zero()) {
          MultiPoly digit = balanced_digit(g, xi);
          cand += digit * MultiPoly::var(v, e);
          g = shift_down(g, digit, xi);
          ++e;
          if (e > 1024) break;  // runaway reconstruction; treat as failure
        }
        if (g.is_zero() && !cand.is_zero()) {
          cand = int_primitive(cand);
          if (MultiPoly::divide_exact(a, cand) && MultiPoly::divide_exact(b, cand))
            return cand;
        }
      }
    }
    // grow the evaluation point (ratio from the GCDHEU literature)
    xi = xi * 73794 / 27011 + 7;
  }
  return std::nullopt;
}

// Subresultant PRS over the primitive parts w.r.t. v; inputs nonconstant
// in v. Returns the (possibly imprimitive) last nonzero remainder, or 1.
MultiPoly subresultant_core(const MultiPoly& ppa, const MultiPoly& ppb, Symbol v) {
  std::vector<MultiPoly> F = ppa.coeffs_in(v), G = ppb.coeffs_in(v);
  if (F.size() < G.size()) std::swap(F, G);
  MultiPoly g(1), h(1);
  while (true) {
    long delta = static_cast<long>(F.size()) - static_cast<long>(G.size());
    std::vector<MultiPoly> R = pseudo_rem(F, G);
    bool rzero = R.size() == 1 && R[0].is_zero();
    if (rzero) return MultiPoly::from_coeffs(G, v);
    if (R.size() == 1) return MultiPoly(1);  // coprime primitive parts
    MultiPoly divisor = g * h.pow(static_cast<uint32_t>(delta));
    for (auto& c : R) c = exact_div_or_throw(c, divisor);
    F = std::move(G);
    G = std::move(R);
    g = F.back();
    if (delta > 0) {
      MultiPoly num = g.pow(static_cast<uint32_t>(delta));
      h = exact_div_or_throw(num, h.pow(static_cast<uint32_t>(delta - 1)));
    }
  }
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
  auto monic = [](MultiPoly p) {
    if (!p.is_zero()) p.mul_coeff(p.leading_coeff().inverse());
    return p;
  };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);

  // Common monomial factor first; cheap and trims the PRS inputs.
  Monomial common;
  {
    auto mono_content = [](const MultiPoly& p) {
      Monomial g = p.terms().begin()->first;
      for (const auto& [m, c] : p.terms()) g = Monomial::gcd(g, m);
      return g;
    };
    common = Monomial::gcd(mono_content(a), mono_content(b));
  }
  MultiPoly pa = a, pb = b;
  if (!common.is_one()) {
    MultiPoly cm;
    cm.add_term(common, Rational(1));
    pa = exact_div_or_throw(pa, cm);
    pb = exact_div_or_throw(pb, cm);
  }

  MultiPoly core(1);
  if (!pa.is_constant() && !pb.is_constant()) {
    // Main variable: smallest symbol present in pa.
    Symbol v = pa.variables().front();
    if (!pb.depends_on(v)) {
      // v cannot occur in the gcd: recurse on the content of pa w.r.t. v.
      auto ca = pa.coeffs_in(v);
      MultiPoly cont;
      for (const auto& c : ca) cont = gcd(cont, c);
      core = gcd(cont, pb);
    } else {
      auto content_of = [&](const MultiPoly& p) {
        MultiPoly c;
        for (const auto& q : p.coeffs_in(v)) c = gcd(c, q);
        return c;
      };
      MultiPoly cont_a = content_of(pa);
      MultiPoly cont_b = content_of(pb);
      MultiPoly ppa = exact_div_or_throw(pa, cont_a);
      MultiPoly ppb = exact_div_or_throw(pb, cont_b);

      // Subresultant PRS on the primitive parts.
      std::vector<MultiPoly> F = ppa.coeffs_in(v), G = ppb.coeffs_in(v);
      if (F.size() < G.size()) std::swap(F, G);
      MultiPoly g(1), h(1);
      MultiPoly prs_gcd;
      while (true) {
        long delta = static_cast<long>(F.size()) - static_cast<long>(G.size());
        std::vector<MultiPoly> R = pseudo_rem(F, G);
        bool rzero = R.size() == 1 && R[0].is_zero();
        if (rzero) {
          prs_gcd = from_coeffs(G, v);
          break;
        }
        if (R.size() == 1) {  // nonzero constant in v: coprime primitive parts
          prs_gcd = MultiPoly(1);
          break;
        }
        MultiPoly divisor = g * h.pow(static_cast<uint32_t>(delta));
        for (auto& c : R) c = exact_div_or_throw(c, divisor);
        F = std::move(G);
        G = std::move(R);
        g = F.back();
        if (delta > 0) {
          MultiPoly num = g.pow(static_cast<uint32_t>(delta));
          h = exact_div_or_throw(num, h.pow(static_cast<uint32_t>(delta - 1)));
        }
      }
      if (!prs_gcd.is_constant()) {
        // The PRS result need not be primitive: strip its content in v.
        MultiPoly cont_r;
        for (const auto& c : prs_gcd.coeffs_in(v)) cont_r = gcd(cont_r, c);
        prs_gcd = exact_div_or_throw(prs_gcd, cont_r);
      } else {
        prs_gcd = MultiPoly(1);
      }
      core = gcd(cont_a, cont_b) * prs_gcd;
    }
  }

  MultiPoly result = core;
  if (!common.is_one()) {
    MultiPoly cm;
    cm.add_term(common, Rational(1));
    result = result * cm;
  }
  return monic(result);
}

MultiPoly MultiPoly::derivative(Symbol s) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    uint32_t e = m.degree_in(s);
    if (e == 0) continue;
    auto mq = m.divide(Monomial::var(s));
    r.add_term(*mq, c * Rational(static_cast<long>(e)));
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(Symbol s) const {
  std::vector<MultiPoly> out(degree_in(s) + 1);
  for (const auto& [m, c] : terms_) {
    uint32_t e = m.degree_in(s);
    Monomial rest = *m.divide(Monomial::var(s, e));
    out[e].add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::from_coeffs(const std::vector<MultiPoly>& coeffs, Symbol s) {
  MultiPoly r;
  for (size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e].is_zero()) continue;
    r += coeffs[e] * MultiPoly::var(s, static_cast<uint32_t>(e));
  }
  return r;
}

Rational MultiPoly::eval(const std::map<Symbol, Rational>& point) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [s, e] : m.factors()) {
      auto it = point.find(s);
      if (it == point.end()) throw UnknownSymbol(s.name());
      t *= it->second.pow(e);
    }
    acc += t;
  }
  return acc;
}

double MultiPoly::eval_double(const std::map<Symbol, double>& point) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (const auto& [s, e] : m.factors()) {
      auto it = point.find(s);
      if (it == point.end()) throw UnknownSymbol(s.name());
      double base = it->second;
      for (uint32_t k = 0; k < e; ++k) t *= base;
    }
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::subst(Symbol s, const MultiPoly& value) const {
  if (!depends_on(s)) return *this;
  auto cs = coeffs_in(s);
  // Horner in s
  MultiPoly acc = cs.back();
  for (size_t i = cs.size() - 1; i-- > 0;) acc = acc * value + cs[i];
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending grlex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational ac = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (m.is_one()) {
      os << ac.str();
    } else if (ac.is_one()) {
      os << m.str();
    } else {
      os << ac.str() << "*" << m.str();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace nij
