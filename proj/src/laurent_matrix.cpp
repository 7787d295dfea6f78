#include "affcells/laurent_matrix.hpp"

#include <algorithm>
#include <limits>

namespace affcells {

LaurentMatrix laurent_zero(int n) {
  LaurentMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Laurent();
  return m;
}

LaurentMatrix laurent_identity(int n) {
  auto m = laurent_zero(n);
  for (int i = 0; i < n; ++i) m(i, i) = Laurent(1);
  return m;
}

LaurentMatrix from_rational(const RationalMatrix& r) {
  LaurentMatrix m(r.rows(), r.cols());
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) m(i, j) = Laurent(r(i, j));
  return m;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("shape mismatch in matrix product");
  LaurentMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) = Laurent();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

LaurentMatrix one_minus_t_inverse(const RationalMatrix& n_matrix) {
  const int n = static_cast<int>(n_matrix.rows());
  auto m = laurent_identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j).add_term(-1, -n_matrix(i, j));
  return m;
}

Laurent determinant(const LaurentMatrix& m) { return determinant_and_adjugate(m).first; }

LaurentMatrix inverse_of_unimodular(const LaurentMatrix& m) {
  auto [det, adj] = determinant_and_adjugate(m);
  if (!det.is_monomial()) throw SingularMatrixError("determinant is not a unit of the Laurent ring");
  const auto unit_inverse = Laurent::monomial(Rational(1) / det.lowest_coefficient(), -det.valuation());
  for (Eigen::Index i = 0; i < adj.rows(); ++i)
    for (Eigen::Index j = 0; j < adj.cols(); ++j) adj(i, j) = adj(i, j) * unit_inverse;
  return adj;
}

RationalMatrix coefficient_matrix(const LaurentMatrix& m, Exponent e) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).coefficient(e);
  return out;
}

std::size_t term_count(const LaurentMatrix& m) {
  std::size_t total = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) total += m(i, j).term_count();
  return total;
}

Exponent min_valuation(const LaurentMatrix& m) {
  Exponent v = Laurent::kInfiniteValuation;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v = std::min(v, m(i, j).valuation());
  return v;
}

Exponent max_degree(const LaurentMatrix& m) {
  Exponent v = Laurent::kNegativeInfiniteDegree;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v = std::max(v, m(i, j).degree());
  return v;
}

LaurentMatrix lift(const AffinePermutation& w) {
  return lift(w, std::vector<Rational>(w.n(), Rational(1)));
}

LaurentMatrix lift(const AffinePermutation& w, const std::vector<Rational>& column_scalars) {
  const int n = w.n();
  if (static_cast<int>(column_scalars.size()) != n) throw DomainError("one scalar per column expected");
  auto m = laurent_zero(n);
  for (int i = 1; i <= n; ++i) {
    if (column_scalars[i - 1] == 0) throw DomainError("lift scalars must be nonzero");
    m(w.sigma(i) - 1, i - 1) = Laurent::monomial(column_scalars[i - 1], w.exp(i));
  }
  return m;
}

AffinePermutation apm(const LaurentMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n || n < 1) throw DomainError("apm needs a square matrix");
  std::vector<int> sigma(n, 0);
  std::vector<Exponent> exps(n, 0);
  std::vector<bool> row_used(n, false);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (m(i, j).is_zero()) continue;
      if (!m(i, j).is_monomial()) throw DomainError("entry is not a monomial");
      if (sigma[j] != 0 || row_used[i]) throw DomainError("support is not a permutation pattern");
      sigma[j] = i + 1;
      exps[j] = m(i, j).valuation();
      row_used[i] = true;
    }
    if (sigma[j] == 0) throw DomainError("zero column in apm input");
  }
  return AffinePermutation(std::move(sigma), std::move(exps));
}

namespace {

bool determinant_is_nonzero_constant(const LaurentMatrix& m) {
  const auto det = determinant(m);
  return !det.is_zero() && det.is_constant();
}

// Block index of each row for the parabolic generated by J.
std::vector<int> blocks_for(int n, const std::vector<int>& J) {
  for (int j : J)
    if (j < 1 || j >= n) throw DomainError("parahoric generators must be finite simple indices");
  std::vector<int> block(n, 0);
  for (int i = 1; i < n; ++i) {
    const bool joined = std::find(J.begin(), J.end(), i) != J.end();
    block[i] = block[i - 1] + (joined ? 0 : 1);
  }
  return block;
}

}  // namespace

bool is_member(const LaurentMatrix& m, const Subgroup& group) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) return false;
  if (group.kind == SubgroupKind::OppositeIwahori) {
    if (max_degree(m) > 0) return false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m(i, j).coefficient(0) != 0) return false;
    return determinant_is_nonzero_constant(m);
  }
  if (min_valuation(m) < 0) return false;
  if (group.kind == SubgroupKind::Iwahori) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (m(i, j).coefficient(0) != 0) return false;
  } else if (group.kind == SubgroupKind::Parahoric) {
    const auto block = blocks_for(n, group.J);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (block[i] > block[j] && m(i, j).coefficient(0) != 0) return false;
  }
  return determinant_is_nonzero_constant(m);
}

}  // namespace affcells
