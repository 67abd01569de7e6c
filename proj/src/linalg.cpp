#include "nij/linalg.hpp"

#include "nij/errors.hpp"

namespace nij {

namespace {

// Bareiss elimination on an n x m working matrix (m >= n); returns the sign
// of the row permutation, or 0 when the leading n x n block is singular.
int bareiss(SymMat& w) {
  const Eigen::Index n = w.rows();
  int sign = 1;
  RationalFunction prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (w(k, k).is_zero()) {
      Eigen::Index p = k + 1;
      while (p < n && w(p, k).is_zero()) ++p;
      if (p == n) return 0;
      w.row(k).swap(w.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < w.cols(); ++j) {
        RationalFunction t = w(k, k) * w(i, j) - w(i, k) * w(k, j);
        w(i, j) = t / prev;
      }
      w(i, k) = RationalFunction(0);
    }
    prev = w(k, k);
  }
  return sign;
}

}  // namespace

RationalFunction determinant(const SymMat& a) {
  if (a.rows() != a.cols()) throw SizeMismatch("determinant of a non-square matrix");
  if (a.rows() == 0) return RationalFunction(1);
  SymMat w = a;
  int sign = bareiss(w);
  if (sign == 0) return RationalFunction(0);
  RationalFunction det = w(a.rows() - 1, a.rows() - 1);
  return sign < 0 ? -det : det;
}

SymVec linear_solve(const SymMat& a, const SymVec& b) {
  if (a.rows() != a.cols())
    throw SizeMismatch("linear_solve requires a square matrix");
  if (a.rows() != b.size())
    throw SizeMismatch("linear_solve: right-hand side length mismatch");
  const Eigen::Index n = a.rows();
  if (n == 0) return SymVec();
  SymMat w(n, n + 1);
  w.leftCols(n) = a;
  w.col(n) = b;
  if (bareiss(w) == 0) throw SingularMatrix();
  RationalFunction det = w(n - 1, n - 1);
  if (det.is_zero()) throw SingularMatrix();
  // Back substitution on the fraction-free upper-triangular form.
  SymVec x = sym_zero_vec(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    RationalFunction acc = w(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= w(i, j) * x(j);
    if (w(i, i).is_zero()) throw SingularMatrix();
    x(i) = acc / w(i, i);
  }
  return x;
}

FaddeevResult faddeev_leverrier(const SymMat& a) {
  if (a.rows() != a.cols()) throw SizeMismatch("faddeev_leverrier on non-square matrix");
  const Eigen::Index n = a.rows();
  FaddeevResult r;
  SymMat m = sym_identity(n);
  r.adj_coeffs.push_back(m);
  RationalFunction c;
  for (Eigen::Index k = 1; k <= n; ++k) {
    SymMat am = a * m;
    RationalFunction tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += am(i, i);
    c = -tr / RationalFunction(Rational(static_cast<long>(k)));
    r.sigma.push_back(c);
    if (k < n) {
      m = am;
      for (Eigen::Index i = 0; i < n; ++i) m(i, i) += c;
      r.adj_coeffs.push_back(m);
    }
  }
  return r;
}

Eigen::Index rank(SymMat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index rk = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index p = row;
    while (p < rows && a(p, col).is_zero()) ++p;
    if (p == rows) continue;
    a.row(row).swap(a.row(p));
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      if (a(i, col).is_zero()) continue;
      RationalFunction f = a(i, col) / a(row, col);
      for (Eigen::Index j = col; j < cols; ++j) a(i, j) -= f * a(row, j);
    }
    ++row;
    ++rk;
  }
  return rk;
}

std::optional<SymVec> solve_general(SymMat a, SymVec b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw SizeMismatch("solve_general: shape mismatch");
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index p = row;
    while (p < rows && a(p, col).is_zero()) ++p;
    if (p == rows) continue;
    a.row(row).swap(a.row(p));
    std::swap(b(row), b(p));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      RationalFunction f = a(i, col) / a(row, col);
      for (Eigen::Index j = col; j < cols; ++j) a(i, j) -= f * a(row, j);
      b(i) -= f * b(row);
    }
    pivot_col.push_back(col);
    ++row;
  }
  // Inconsistent rows?
  for (Eigen::Index i = row; i < rows; ++i)
    if (!b(i).is_zero()) return std::nullopt;
  // Unique solution requires a pivot in every column.
  if (static_cast<Eigen::Index>(pivot_col.size()) != cols) return std::nullopt;
  SymVec x = sym_zero_vec(cols);
  for (Eigen::Index i = 0; i < cols; ++i) x(pivot_col[i]) = b(i) / a(i, pivot_col[i]);
  return x;
}

SymMat inverse(const SymMat& a) {
  if (a.rows() != a.cols()) throw SizeMismatch("inverse of a non-square matrix");
  if (a.rows() == 0) return a;
  FaddeevResult fl = faddeev_leverrier(a);
  const RationalFunction& sn = fl.sigma.back();  // (-1)^n det A
  if (sn.is_zero()) throw SingularMatrix("inverse of a degenerate matrix");
  // (tI - A) adj(tI - A) = chi(t) I; at t = 0: (-A) M_{n-1} = sigma_n I.
  return fl.adj_coeffs.back() * (RationalFunction(-1) / sn);
}

}  // namespace nij
