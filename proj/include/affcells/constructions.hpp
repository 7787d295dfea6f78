#pragma once

// Explicit elements attached to a parabolic tableau, and the maps from the
// cotangent bundle of G/P and from the nilpotent cone to the affine flag
// variety.
//
// Notation: F^i_{j,k} = E_{f(i,j), f(i,k)}.

#include <cstdint>
#include <optional>
#include <vector>

#include "affcells/affine_permutation.hpp"
#include "affcells/laurent_matrix.hpp"
#include "affcells/partition.hpp"
#include "affcells/tableau.hpp"

namespace affcells {

/// Z = sum_i sum_{j < nu_i} F^i_{j,j+1}.
RationalMatrix build_Z(const ParabolicTableau& tab);

struct IwahoriPair {
  LaurentMatrix b;
  LaurentMatrix c;
};

/// b = sum_i sum_j sum_{k >= j} t^{k-j} F^i_{k,j},
/// c = sum_i (sum_j F^i_{j,j} + sum_{j >= 2} t^{j-1} F^i_{j,1}).
IwahoriPair build_bc(const ParabolicTableau& tab);

/// sum_i (t^{nu_i - 1} F^i_{nu_i,1} - sum_{j >= 2} t^{-1} F^i_{j-1,j}); equals b (1 - t^{-1} Z) c.
LaurentMatrix build_varpi_tilde(const ParabolicTableau& tab);
AffinePermutation build_varpi(const ParabolicTableau& tab);

/// sum_{i <= s} t^{nu_i - 1} E_{i, l(i)} + sum_{i <= n-s} t^{-1} E_{i+s, m(i)}.
AffinePermutation build_kappa(const ParabolicTableau& tab);
/// The same support as kappa with every exponent 0.
AffinePermutation build_sigma(const ParabolicTableau& tab);

/// varpi = w_g kappa w_p with w_g in W and w_p in W_P.
/// w_g sends i to f(i, nu_i) (i <= s) and i + s to iota(t(i)); w_p sends f(i, 1) to l(i)
/// and t(i) to m(i).
struct Factorization {
  AffinePermutation w_g;
  AffinePermutation w_p;
};
Factorization build_factorization(const ParabolicTableau& tab);

/// q_i = 1 - nu_i for i <= s, 1 otherwise. tau(q) then has exponents nu_i - 1 and -1.
Coroot build_q(const ParabolicTableau& tab);
/// Same formula for an arbitrary partition of n.
Coroot q_from_partition(const Partition& nu, int n);

/// 2 dim G/P + sum_{k' < k} #Row(k) #Blue(k').
std::int64_t kappa_length_formula(const ParabolicTableau& tab);

/// Finite simple indices 1..n-1.
std::vector<int> finite_generators(int n);

/// w is finite and its permutation preserves the rows of the tableau.
bool in_parabolic_weyl_group(const AffinePermutation& w, const ParabolicDescriptor& desc);

/// A point (g, Y) of G x^P u.
struct CotangentPoint {
  RationalMatrix g;
  RationalMatrix y;
};

/// Throws DomainError unless det g = 1 and Y lies in u for desc.
void validate_point(const CotangentPoint& pt, const ParabolicDescriptor& desc);

/// (g, Y) ~ (g p^{-1}, p Y p^{-1}) for some p in P.
bool points_equivalent(const CotangentPoint& a, const CotangentPoint& b, const ParabolicDescriptor& desc);

struct PhiResult {
  LaurentMatrix matrix;
  AffinePermutation cell;
  bool below_kappa = false;
};

/// g (1 - t^{-1} Y) mod the parahoric of P.
PhiResult phi_P(const CotangentPoint& pt, const ParabolicTableau& tab);

struct PsiResult {
  LaurentMatrix matrix;
  /// Iwahori cell modulo G_0.
  AffinePermutation cell;
  /// Label of the G_0 double coset containing the cell.
  Coroot orbit;
  Partition jordan;
  /// tau of q(jordan type).
  AffinePermutation bound;
  bool cell_below_bound = false;
  bool orbit_is_bound = false;
};

/// (1 - t^{-1} N) mod G_0.
PsiResult psi(const RationalMatrix& n_matrix);

/// Recovers N from 1 - t^{-1} N; throws DomainError if the matrix has another shape.
RationalMatrix psi_reconstruct(const LaurentMatrix& m);

/// g Y g^{-1}.
RationalMatrix springer_theta(const CotangentPoint& pt);

/// g (1 - t^{-1} Y) == (1 - t^{-1} g Y g^{-1}) g, compared entrywise.
bool springer_commutes(const CotangentPoint& pt);

struct Verdicts {
  bool g_stable = false;
  bool kappa_minimal_in_WP = false;
  std::int64_t kappa_length = 0;
  std::int64_t kappa_length_formula = 0;
  bool is_compactification = false;
  /// is_compactification agrees with r <= 2.
  bool compactification_matches_rows = false;
};

Verdicts verdicts(const ParabolicTableau& tab);

/// Searches W for w with extract_cell_mod(g (1 - t^{-1} Z), S_P) = kappa, g a
/// determinant-one signed lift of w.
std::optional<AffinePermutation> find_minimality_witness(const ParabolicTableau& tab);

/// Determinant-one signed permutation matrix for a finite w.
RationalMatrix signed_permutation_matrix(const AffinePermutation& w);

}  // namespace affcells
