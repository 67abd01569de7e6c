#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "nij/ratfunc.hpp"

namespace Eigen {

template <>
struct NumTraits<nij::RationalFunction> {
  using Real = nij::RationalFunction;
  using NonInteger = nij::RationalFunction;
  using Nested = nij::RationalFunction;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 128
  };
  static nij::RationalFunction epsilon() { return nij::RationalFunction(0); }
  static nij::RationalFunction dummy_precision() { return nij::RationalFunction(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace nij {

using SymMat = Eigen::Matrix<RationalFunction, Eigen::Dynamic, Eigen::Dynamic>;
using SymVec = Eigen::Matrix<RationalFunction, Eigen::Dynamic, 1>;

inline bool is_zero(const SymMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline bool is_zero(const SymVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

inline SymMat sym_identity(Eigen::Index n) {
  SymMat m = SymMat::Constant(n, n, RationalFunction(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = RationalFunction(1);
  return m;
}

inline SymMat sym_zero(Eigen::Index r, Eigen::Index c) {
  return SymMat::Constant(r, c, RationalFunction(0));
}

inline SymVec sym_zero_vec(Eigen::Index n) {
  return SymVec::Constant(n, RationalFunction(0));
}

// Exact determinant by fraction-free (Bareiss) elimination.
RationalFunction determinant(const SymMat& a);

// Exact solve of a square nondegenerate system; throws SingularMatrix when
// det == 0 identically and SizeMismatch on shape errors.
SymVec linear_solve(const SymMat& a, const SymVec& b);

// Adjugate and characteristic coefficients via the Faddeev-LeVerrier
// recursion: char poly det(t I - A) = t^n + sigma[0] t^{n-1} + ... + sigma[n-1],
// adj(t I - A) = sum_k t^{n-1-k} M_k.
struct FaddeevResult {
  std::vector<RationalFunction> sigma;  // sigma_1..sigma_n
  std::vector<SymMat> adj_coeffs;       // M_0..M_{n-1}, M_0 = Id
};
FaddeevResult faddeev_leverrier(const SymMat& a);

// Rank over the rational-function field.
Eigen::Index rank(SymMat a);

// Exact solve of a (possibly rectangular) consistent system a x = b over the
// field; nullopt when inconsistent or the solution is not unique.
std::optional<SymVec> solve_general(SymMat a, SymVec b);

SymMat inverse(const SymMat& a);

}  // namespace nij
