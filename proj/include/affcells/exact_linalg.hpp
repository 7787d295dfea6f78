#pragma once

// Exact elimination routines over fields (Rational) and over the Laurent ring.
// Nothing here compares magnitudes: pivots are chosen by exact nonzero tests.

#include <cstddef>
#include <utility>

#include "affcells/laurent_poly.hpp"
#include "affcells/scalar.hpp"

namespace affcells {

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

template <typename Scalar>
LaurentPoly<Scalar> exact_quotient(const LaurentPoly<Scalar>& a, const LaurentPoly<Scalar>& b) {
  return exact_divide(a, b);
}

inline bool is_zero_scalar(const Rational& x) { return x == 0; }

template <typename Scalar>
bool is_zero_scalar(const LaurentPoly<Scalar>& x) {
  return x.is_zero();
}

/// Rank over a field by row reduction.
template <typename Scalar>
std::size_t rank(Matrix<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    Eigen::Index p = pivot_row;
    while (p < rows && is_zero_scalar(m(p, col))) ++p;
    if (p == rows) continue;
    if (p != pivot_row) m.row(p).swap(m.row(pivot_row));
    const Scalar inv = Scalar(1) / m(pivot_row, col);
    for (Eigen::Index r = pivot_row + 1; r < rows; ++r) {
      if (is_zero_scalar(m(r, col))) continue;
      const Scalar factor = m(r, col) * inv;
      for (Eigen::Index c = col; c < cols; ++c) {
        if (!is_zero_scalar(m(pivot_row, c))) m(r, c) -= factor * m(pivot_row, c);
      }
    }
    ++pivot_row;
  }
  return static_cast<std::size_t>(pivot_row);
}

template <typename Scalar>
std::size_t nullity(const Matrix<Scalar>& m) {
  return static_cast<std::size_t>(m.cols()) - rank(m);
}

/// Fraction-free Gauss-Jordan elimination of [M | I].
///
/// Returns (det M, adj M). Works over any integral domain with exact division,
/// which is what the Laurent ring needs. A singular M yields det = 0 and an
/// unspecified adjugate.
template <typename Scalar>
std::pair<Scalar, Matrix<Scalar>> determinant_and_adjugate(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw DomainError("determinant of a non-square matrix");
  Matrix<Scalar> a(n, 2 * n);
  a.leftCols(n) = m;
  a.rightCols(n).setZero();
  for (Eigen::Index i = 0; i < n; ++i) a(i, n + i) = Scalar(1);

  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && is_zero_scalar(a(p, k))) ++p;
    if (p == n) return {Scalar(0), Matrix<Scalar>::Zero(n, n)};
    if (p != k) {
      a.row(p).swap(a.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      for (Eigen::Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = exact_quotient(Scalar(a(k, k) * a(i, j) - a(i, k) * a(k, j)), previous);
      }
      a(i, k) = Scalar(0);
    }
    previous = a(k, k);
  }
  // Now a = [d I | d M^{-1}] with d = det(row-permuted M).
  Scalar det = negate ? Scalar(-previous) : previous;
  Matrix<Scalar> adjugate = a.rightCols(n);
  if (negate) adjugate = -adjugate;
  return {det, adjugate};
}

template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  return determinant_and_adjugate(m).first;
}

/// Inverse over a field.
inline RationalMatrix inverse(const RationalMatrix& m) {
  auto [det, adj] = determinant_and_adjugate(m);
  if (det == 0) throw SingularMatrixError("matrix is singular");
  return adj / det;
}

}  // namespace affcells
