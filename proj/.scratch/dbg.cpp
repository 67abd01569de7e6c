#include "nij/multipoly.hpp"
#include "nij/ratfunc.hpp"
#include <iostream>
#include <random>
using namespace nij;
int main() {
  Symbol X = Symbol::intern("x"), Y = Symbol::intern("y");
  RationalFunction x = RationalFunction::var(X), y = RationalFunction::var(Y);
  std::cerr << "t1\n";
  RationalFunction a = x / y + (RationalFunction(1) - x / y);
  std::cerr << "a = " << a << "\n";
  RationalFunction b(x.num() * x.num() - MultiPoly(1), x.num() - MultiPoly(1));
  std::cerr << "b = " << b << "\n";
  RationalFunction c = (x / (x + y)) * ((x + y) / x);
  std::cerr << "c = " << c << "\n";
  MultiPoly p1 = (x + y).num() * (x - y).num();
  MultiPoly p2 = (x + y).num() * (x * x + y).num();
  std::cerr << "gcd = " << MultiPoly::gcd(p1, p2) << "\n";
  std::mt19937_64 rng(20240211);
  std::uniform_int_distribution<int> nt(1, 4), deg(0, 3), coeff(-7, 7);
  auto random_poly = [&](std::vector<Symbol> vars) {
    MultiPoly p;
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (Symbol v : vars) m = m * Monomial::var(v, (uint32_t)deg(rng));
      int cc = coeff(rng);
      if (cc) p.add_term(m, Rational(cc));
    }
    return p;
  };
  for (int iter = 0; iter < 40; ++iter) {
    std::cerr << "iter " << iter << "\n";
    RationalFunction A{random_poly({X, Y})}, B{random_poly({X, Y})}, C{random_poly({X, Y})};
    if ((A + B) + C != A + (B + C)) { std::cerr << "ASSOC FAIL\n"; return 1; }
    if (A * (B + C) != A * B + A * C) { std::cerr << "DISTR FAIL\n"; return 1; }
    if (!B.is_zero() && (A / B) * B != A) { std::cerr << "DIV FAIL\n"; return 1; }
  }
  std::cerr << "done\n";
}
