#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "nij/errors.hpp"
#include "nij/linalg.hpp"

using namespace nij;

namespace {
Symbol X1 = Symbol::intern("x1");
Symbol X2 = Symbol::intern("x2");

RationalFunction v1 = RationalFunction::var(X1);
RationalFunction v2 = RationalFunction::var(X2);
}  // namespace

TEST_CASE("identity solve returns rhs") {
  SymMat a = sym_identity(3);
  SymVec b = sym_zero_vec(3);
  b(0) = v1;
  b(1) = v2 * v2;
  b(2) = RationalFunction(5);
  SymVec x = linear_solve(a, b);
  for (int i = 0; i < 3; ++i) CHECK(x(i) == b(i));
}

TEST_CASE("2x2 Vandermonde solve (hand Gaussian elimination oracle)") {
  // [[x1, 1], [x2, 1]] (z1, z2)^T = (1, 1)^T  =>  z = (0, 1)
  SymMat a(2, 2);
  a(0, 0) = v1;
  a(0, 1) = RationalFunction(1);
  a(1, 0) = v2;
  a(1, 1) = RationalFunction(1);
  SymVec b(2);
  b(0) = RationalFunction(1);
  b(1) = RationalFunction(1);
  SymVec x = linear_solve(a, b);
  CHECK(x(0).is_zero());
  CHECK(x(1) == RationalFunction(1));
  // residual is exactly zero
  SymVec r = a * x - b;
  CHECK(is_zero(r));
}

TEST_CASE("singular matrix reported distinctly from size mismatch") {
  SymMat a(2, 2);
  a(0, 0) = v1;
  a(0, 1) = v2;
  a(1, 0) = v1;
  a(1, 1) = v2;  // det == 0 identically
  SymVec b(2);
  b(0) = RationalFunction(1);
  b(1) = RationalFunction(1);
  CHECK_THROWS_AS(linear_solve(a, b), SingularMatrix);
  SymVec b3(3);
  b3(0) = b3(1) = b3(2) = RationalFunction(1);
  CHECK_THROWS_AS(linear_solve(a, b3), SizeMismatch);
}

TEST_CASE("determinant: Bareiss vs cofactor cross-check on random matrices") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> pick(0, 3);
  auto entry = [&]() {
    RationalFunction e(coeff(rng));
    if (pick(rng) == 0) e = e + v1;
    if (pick(rng) == 1) e = e * v2 + RationalFunction(coeff(rng));
    return e;
  };
  // cofactor expansion as independent oracle
  std::function<RationalFunction(const SymMat&)> cof = [&](const SymMat& m) {
    const auto n = m.rows();
    if (n == 1) return m(0, 0);
    RationalFunction acc(0);
    for (Eigen::Index j = 0; j < n; ++j) {
      SymMat minor(n - 1, n - 1);
      for (Eigen::Index r = 1; r < n; ++r) {
        Eigen::Index cc = 0;
        for (Eigen::Index c = 0; c < n; ++c) {
          if (c == j) continue;
          minor(r - 1, cc++) = m(r, c);
        }
      }
      RationalFunction term = m(0, j) * cof(minor);
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  };
  for (int iter = 0; iter < 10; ++iter) {
    int n = 2 + iter % 3;
    SymMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry();
    CHECK(determinant(m) == cof(m));
  }
}

TEST_CASE("linear_solve residual is exactly zero on random systems") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int iter = 0; iter < 15; ++iter) {
    int n = 2 + iter % 3;
    SymMat a(n, n);
    SymVec b(n);
    for (int i = 0; i < n; ++i) {
      b(i) = RationalFunction(coeff(rng)) + v1 * RationalFunction(coeff(rng));
      for (int j = 0; j < n; ++j)
        a(i, j) = RationalFunction(coeff(rng)) + (i == j ? v2 : RationalFunction(0));
    }
    if (determinant(a).is_zero()) continue;
    SymVec x = linear_solve(a, b);
    CHECK(is_zero(SymVec(a * x - b)));
  }
}

TEST_CASE("faddeev-leverrier char poly and adjugate") {
  // companion n=2: chi = t^2 + x1 t + x2, adj(tI-L) known
  SymMat l(2, 2);
  l(0, 0) = -v1;
  l(0, 1) = RationalFunction(1);
  l(1, 0) = -v2;
  l(1, 1) = RationalFunction(0);
  auto fl = faddeev_leverrier(l);
  REQUIRE(fl.sigma.size() == 2);
  CHECK(fl.sigma[0] == v1);
  CHECK(fl.sigma[1] == v2);
  // (tI - L) adj(tI - L) = chi(t) I, checked coefficientwise in t:
  // coefficient recursion: M_0 = I, M_k = L M_{k-1} + sigma_k I.
  SymMat m1 = l * fl.adj_coeffs[0];
  m1(0, 0) += fl.sigma[0];
  m1(1, 1) += fl.sigma[0];
  CHECK(is_zero(SymMat(m1 - fl.adj_coeffs[1])));
  // and L M_1 + sigma_2 I = 0 (Cayley-Hamilton tail)
  SymMat tail = l * fl.adj_coeffs[1];
  tail(0, 0) += fl.sigma[1];
  tail(1, 1) += fl.sigma[1];
  CHECK(is_zero(tail));
}

TEST_CASE("inverse via adjugate") {
  SymMat g(2, 2);
  g(0, 0) = v1 - v2;
  g(0, 1) = RationalFunction(0);
  g(1, 0) = RationalFunction(0);
  g(1, 1) = v2 - v1;
  SymMat gi = inverse(g);
  CHECK(is_zero(SymMat(g * gi - sym_identity(2))));
  SymMat sing(2, 2);
  sing(0, 0) = v1;
  sing(0, 1) = v1;
  sing(1, 0) = v2;
  sing(1, 1) = v2;
  CHECK_THROWS_AS(inverse(sing), SingularMatrix);
}

TEST_CASE("rank and general solve") {
  SymMat a(3, 2);
  a(0, 0) = RationalFunction(1);
  a(0, 1) = RationalFunction(0);
  a(1, 0) = RationalFunction(0);
  a(1, 1) = v1;
  a(2, 0) = RationalFunction(1);
  a(2, 1) = v1;
  CHECK(rank(a) == 2);
  SymVec b(3);
  b(0) = v2;
  b(1) = v1 * v1;
  b(2) = v2 + v1 * v1;
  auto x = solve_general(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == v2);
  CHECK((*x)(1) == v1);
  b(2) = RationalFunction(0);  // now inconsistent
  CHECK(!solve_general(a, b).has_value());
}
