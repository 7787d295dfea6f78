#include "affcells/cell.hpp"

#include <algorithm>
#include <stdexcept>

#include "affcells/bruhat.hpp"

namespace affcells {

namespace {

struct Eliminator {
  LaurentMatrix a;
  int n;
  Exponent bound;
  long long budget;
  long long steps = 0;

  void spend() {
    if (++steps > budget) throw std::logic_error("cell extraction exceeded its step budget");
  }

  // row `target` -= (lowest term of a(target, col) / lowest term of a(src, col)) * row src
  void cancel_row_term(int target, int src, int col) {
    spend();
    const auto& pivot = a(src, col);
    const auto& entry = a(target, col);
    const auto factor =
        Laurent::monomial(entry.lowest_coefficient() / pivot.lowest_coefficient(), entry.valuation() - pivot.valuation());
    for (int j = 0; j < n; ++j) {
      if (a(src, j).is_zero()) continue;
      a(target, j) -= factor * a(src, j);
      a(target, j).truncate_at(bound);
    }
  }

  void cancel_column_term(int target, int src, int row) {
    spend();
    const auto& pivot = a(row, src);
    const auto& entry = a(row, target);
    const auto factor =
        Laurent::monomial(entry.lowest_coefficient() / pivot.lowest_coefficient(), entry.valuation() - pivot.valuation());
    for (int i = 0; i < n; ++i) {
      if (a(i, src).is_zero()) continue;
      a(i, target) -= factor * a(i, src);
      a(i, target).truncate_at(bound);
    }
  }
};

}  // namespace

AffinePermutation extract_cell(const LaurentMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n < 1 || m.cols() != n) throw DomainError("cell extraction needs a square matrix");
  for (int i = 0; i < n; ++i) {
    bool row_zero = true;
    bool col_zero = true;
    for (int j = 0; j < n; ++j) {
      row_zero = row_zero && m(i, j).is_zero();
      col_zero = col_zero && m(j, i).is_zero();
    }
    if (row_zero || col_zero) throw SingularMatrixError("matrix has a zero row or column");
  }
  const auto det = determinant(m);
  if (det.is_zero()) throw SingularMatrixError("matrix is singular");
  if (!det.is_monomial()) throw SingularMatrixError("determinant is not a unit of the Laurent ring");
  if (det.valuation() != 0) throw DomainError("determinant must have t-order zero");

  const Exponent e_min = min_valuation(m);
  const Exponent bound = det.valuation() - (n - 1) * e_min + 1;
  Eliminator el{m, n, bound, 0};
  el.budget = 4LL * n * n * (bound - e_min + 1) + 16;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) el.a(i, j).truncate_at(bound);

  std::vector<bool> row_active(n, true);
  std::vector<bool> col_active(n, true);
  std::vector<int> sigma(n, 0);
  std::vector<Exponent> exps(n, 0);

  for (int round = 0; round < n; ++round) {
    int pr = -1;
    int pc = -1;
    Exponent best = Laurent::kInfiniteValuation;
    for (int i = n - 1; i >= 0; --i) {
      if (!row_active[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (!col_active[j]) continue;
        const auto v = el.a(i, j).valuation();
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) throw std::logic_error("cell extraction lost a pivot; the truncation bound is too small");

    for (int i = 0; i < n; ++i) {
      if (i == pr) continue;
      while (!el.a(i, pc).is_zero()) el.cancel_row_term(i, pr, pc);
    }
    for (int j = 0; j < n; ++j) {
      if (j == pc) continue;
      while (!el.a(pr, j).is_zero()) el.cancel_column_term(j, pc, pr);
    }
    sigma[pc] = pr + 1;
    exps[pc] = best;
    row_active[pr] = false;
    col_active[pc] = false;
  }
  return AffinePermutation(std::move(sigma), std::move(exps));
}

AffinePermutation extract_cell_mod(const LaurentMatrix& m, const std::vector<int>& J) {
  return min_coset_rep(extract_cell(m), J, Side::Right);
}

Coroot spherical_label(const AffinePermutation& w) {
  std::vector<Exponent> q(w.exps().size());
  std::transform(w.exps().begin(), w.exps().end(), q.begin(), [](Exponent c) { return -c; });
  std::sort(q.begin(), q.end());
  return Coroot(std::move(q));
}

}  // namespace affcells
