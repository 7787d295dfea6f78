#include "affcells/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "affcells/bruhat.hpp"
#include "affcells/cell.hpp"
#include "affcells/exact_linalg.hpp"
#include "affcells/nilpotent.hpp"

namespace affcells {

namespace {

// Adds coef t^e at F^i_{j,k}.
void add_F(LaurentMatrix& m, const ParabolicTableau& tab, int i, int j, int k, Exponent e, const Rational& coef) {
  m(tab.f(i, j) - 1, tab.f(i, k) - 1).add_term(e, coef);
}

AffinePermutation permutation_from_columns(int n, const std::vector<std::pair<int, int>>& column_to_row,
                                           const std::vector<Exponent>& column_exps) {
  std::vector<int> sigma(n, 0);
  for (const auto& [col, row] : column_to_row) sigma[col - 1] = row;
  return AffinePermutation(std::move(sigma), column_exps);
}

}  // namespace

RationalMatrix build_Z(const ParabolicTableau& tab) {
  RationalMatrix z = RationalMatrix::Zero(tab.n(), tab.n());
  for (int i = 1; i <= tab.s(); ++i)
    for (int j = 1; j < tab.nu().part(i); ++j) z(tab.f(i, j) - 1, tab.f(i, j + 1) - 1) = 1;
  return z;
}

IwahoriPair build_bc(const ParabolicTableau& tab) {
  IwahoriPair out{laurent_zero(tab.n()), laurent_zero(tab.n())};
  for (int i = 1; i <= tab.s(); ++i) {
    const int height = tab.nu().part(i);
    for (int j = 1; j <= height; ++j) {
      for (int k = j; k <= height; ++k) add_F(out.b, tab, i, k, j, k - j, 1);
      add_F(out.c, tab, i, j, j, 0, 1);
      if (j >= 2) add_F(out.c, tab, i, j, 1, j - 1, 1);
    }
  }
  return out;
}

LaurentMatrix build_varpi_tilde(const ParabolicTableau& tab) {
  auto m = laurent_zero(tab.n());
  for (int i = 1; i <= tab.s(); ++i) {
    const int height = tab.nu().part(i);
    add_F(m, tab, i, height, 1, height - 1, 1);
    for (int j = 2; j <= height; ++j) add_F(m, tab, i, j - 1, j, -1, -1);
  }
  return m;
}

AffinePermutation build_varpi(const ParabolicTableau& tab) { return apm(build_varpi_tilde(tab)); }

AffinePermutation build_kappa(const ParabolicTableau& tab) {
  const int n = tab.n();
  const int s = tab.s();
  std::vector<std::pair<int, int>> placement;
  std::vector<Exponent> exps(n, 0);
  for (int i = 1; i <= s; ++i) {
    placement.emplace_back(tab.l(i), i);
    exps[tab.l(i) - 1] = tab.nu().part(i) - 1;
  }
  for (int i = 1; i <= n - s; ++i) {
    placement.emplace_back(tab.m(i), i + s);
    exps[tab.m(i) - 1] = -1;
  }
  return permutation_from_columns(n, placement, exps);
}

AffinePermutation build_sigma(const ParabolicTableau& tab) {
  const auto kappa = build_kappa(tab);
  return AffinePermutation(kappa.sigma(), std::vector<Exponent>(tab.n(), 0));
}

Factorization build_factorization(const ParabolicTableau& tab) {
  const int n = tab.n();
  const int s = tab.s();
  const std::vector<Exponent> zeros(n, 0);
  std::vector<std::pair<int, int>> g_cols;
  std::vector<std::pair<int, int>> p_cols;
  for (int i = 1; i <= s; ++i) {
    g_cols.emplace_back(i, tab.f(i, tab.nu().part(i)));
    p_cols.emplace_back(tab.f(i, 1), tab.l(i));
  }
  for (int i = 1; i <= n - s; ++i) {
    g_cols.emplace_back(i + s, tab.iota(tab.t(i)));
    p_cols.emplace_back(tab.t(i), tab.m(i));
  }
  return {permutation_from_columns(n, g_cols, zeros), permutation_from_columns(n, p_cols, zeros)};
}

Coroot q_from_partition(const Partition& nu, int n) {
  if (nu.total() != n) throw DomainError("partition total must equal n");
  std::vector<Exponent> q(n, 1);
  for (int i = 1; i <= nu.size(); ++i) q[i - 1] = 1 - nu.part(i);
  return Coroot(std::move(q));
}

Coroot build_q(const ParabolicTableau& tab) { return q_from_partition(tab.nu(), tab.n()); }

std::int64_t kappa_length_formula(const ParabolicTableau& tab) {
  std::int64_t extra = 0;
  std::int64_t blue_above = 0;
  for (int k = 1; k <= tab.r(); ++k) {
    extra += static_cast<std::int64_t>(tab.row(k).size()) * blue_above;
    blue_above += static_cast<std::int64_t>(tab.blue_of_row(k).size());
  }
  return 2 * dim_g_mod_p(tab) + extra;
}

std::vector<int> finite_generators(int n) {
  std::vector<int> out(std::max(n - 1, 0));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

bool in_parabolic_weyl_group(const AffinePermutation& w, const ParabolicDescriptor& desc) {
  if (!w.is_finite() || w.n() != desc.n) return false;
  const auto block = block_indices(desc);
  for (int i = 1; i <= w.n(); ++i)
    if (block[w.sigma(i)] != block[i]) return false;
  return true;
}

void validate_point(const CotangentPoint& pt, const ParabolicDescriptor& desc) {
  if (pt.g.rows() != desc.n || pt.g.cols() != desc.n) throw DomainError("g has the wrong size");
  if (determinant(pt.g) != 1) throw DomainError("g must have determinant 1");
  if (!in_nilradical_by_blocks(pt.y, desc)) throw DomainError("Y is not in the nilradical of P");
}

bool points_equivalent(const CotangentPoint& a, const CotangentPoint& b, const ParabolicDescriptor& desc) {
  const RationalMatrix p = inverse(b.g) * a.g;
  if (!in_parabolic(p, desc)) return false;
  return RationalMatrix(p * a.y * inverse(p)) == b.y;
}

PhiResult phi_P(const CotangentPoint& pt, const ParabolicTableau& tab) {
  validate_point(pt, tab.descriptor());
  PhiResult out;
  out.matrix = multiply(from_rational(pt.g), one_minus_t_inverse(pt.y));
  out.cell = extract_cell_mod(out.matrix, tab.descriptor().parabolic_generators());
  out.below_kappa = bruhat_leq(out.cell, build_kappa(tab));
  return out;
}

PsiResult psi(const RationalMatrix& n_matrix) {
  PsiResult out;
  out.jordan = jordan_type(n_matrix);
  const int n = static_cast<int>(n_matrix.rows());
  const auto q = q_from_partition(out.jordan, n);
  out.bound = tau(q);
  out.matrix = one_minus_t_inverse(n_matrix);
  out.cell = extract_cell_mod(out.matrix, finite_generators(n));
  out.orbit = spherical_label(out.cell);
  out.cell_below_bound = bruhat_leq(out.cell, out.bound);
  out.orbit_is_bound = out.orbit == q;
  return out;
}

RationalMatrix psi_reconstruct(const LaurentMatrix& m) {
  const auto n = m.rows();
  RationalMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& entry = m(i, j);
      for (const auto& [e, c] : entry.terms()) {
        const bool allowed = e == -1 || (e == 0 && i == j);
        if (!allowed) throw DomainError("matrix is not of the form 1 - t^{-1} N");
      }
      if (entry.coefficient(0) != (i == j ? 1 : 0)) throw DomainError("matrix is not of the form 1 - t^{-1} N");
      out(i, j) = -entry.coefficient(-1);
    }
  }
  return out;
}

RationalMatrix springer_theta(const CotangentPoint& pt) { return pt.g * pt.y * inverse(pt.g); }

bool springer_commutes(const CotangentPoint& pt) {
  const auto g = from_rational(pt.g);
  const auto lhs = multiply(g, one_minus_t_inverse(pt.y));
  const auto rhs = multiply(one_minus_t_inverse(springer_theta(pt)), g);
  return lhs == rhs;
}

Verdicts verdicts(const ParabolicTableau& tab) {
  Verdicts v;
  const int n = tab.n();
  const auto kappa = build_kappa(tab);
  const auto J = tab.descriptor().parabolic_generators();

  v.g_stable = true;
  for (int i = 1; i < n; ++i) {
    const auto moved = simple_reflection(n, i) * kappa;
    if (!(min_coset_rep(moved, J, Side::Right) == kappa || bruhat_less(moved, kappa))) v.g_stable = false;
  }
  v.kappa_minimal_in_WP =
      std::none_of(J.begin(), J.end(), [&](int j) { return has_right_descent(kappa, j); });
  v.kappa_length = length(kappa);
  v.kappa_length_formula = kappa_length_formula(tab);
  v.is_compactification = v.kappa_length == 2 * dim_g_mod_p(tab);
  v.compactification_matches_rows = v.is_compactification == (tab.r() <= 2);
  return v;
}

RationalMatrix signed_permutation_matrix(const AffinePermutation& w) {
  if (!w.is_finite()) throw DomainError("signed permutation lift needs a finite element");
  const int n = w.n();
  RationalMatrix g = RationalMatrix::Zero(n, n);
  for (int i = 1; i <= n; ++i) g(w.sigma(i) - 1, i - 1) = 1;
  if (determinant(g) != 1) g.col(0) = -g.col(0);
  return g;
}

std::optional<AffinePermutation> find_minimality_witness(const ParabolicTableau& tab) {
  const int n = tab.n();
  const auto kappa = build_kappa(tab);
  const auto J = tab.descriptor().parabolic_generators();
  const auto loop = one_minus_t_inverse(build_Z(tab));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    const AffinePermutation w(perm, std::vector<Exponent>(n, 0));
    const auto m = multiply(from_rational(signed_permutation_matrix(w)), loop);
    if (extract_cell_mod(m, J) == kappa) return w;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace affcells
