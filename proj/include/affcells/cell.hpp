#pragma once

// Bruhat cell of an invertible Laurent matrix: the unique w with M in B w B,
// B the Iwahori subgroup.

#include <vector>

#include "affcells/affine_permutation.hpp"
#include "affcells/laurent_matrix.hpp"

namespace affcells {

/// Reduces M to a monomial matrix with Iwahori row and column operations.
///
/// Pivot rule: smallest valuation among active entries, ties broken by the
/// largest row and then the smallest column. The pivot row and column are
/// cleared one lowest-order term at a time. Terms of order at least
/// ord(det) - (n-1) e_min + 1 are discarded, where e_min is the smallest entry
/// valuation; multiplying M by 1 + O(t) absorbs them.
///
/// Throws SingularMatrixError for det = 0 or a non-monomial determinant,
/// DomainError when ord(det) != 0, and std::logic_error if the step budget is
/// exhausted.
AffinePermutation extract_cell(const LaurentMatrix& m);

/// min_coset_rep(extract_cell(M), J, Side::Right).
AffinePermutation extract_cell_mod(const LaurentMatrix& m, const std::vector<int>& J);

/// The translation label of the double coset W w W, as a weakly increasing
/// coroot q. tau(q) is then the longest element of W w W that is minimal in its
/// right W-coset.
Coroot spherical_label(const AffinePermutation& w);

}  // namespace affcells
