#pragma once

// Square matrices over Q[t, t^{-1}].

#include <cstddef>
#include <vector>

#include "affcells/affine_permutation.hpp"
#include "affcells/exact_linalg.hpp"
#include "affcells/laurent_poly.hpp"
#include "affcells/scalar.hpp"

namespace affcells {

using Laurent = LaurentPoly<Rational>;
using LaurentMatrix = Matrix<Laurent>;

LaurentMatrix laurent_identity(int n);
LaurentMatrix laurent_zero(int n);
LaurentMatrix from_rational(const RationalMatrix& m);

/// Product that skips zero entries; same result as a * b.
LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);

/// 1 - t^{-1} N.
LaurentMatrix one_minus_t_inverse(const RationalMatrix& n_matrix);

Laurent determinant(const LaurentMatrix& m);

/// Inverse of a matrix whose determinant is c t^k with c != 0.
/// Throws SingularMatrixError otherwise.
LaurentMatrix inverse_of_unimodular(const LaurentMatrix& m);

/// Coefficient matrix of t^e.
RationalMatrix coefficient_matrix(const LaurentMatrix& m, Exponent e);

std::size_t term_count(const LaurentMatrix& m);
Exponent min_valuation(const LaurentMatrix& m);
Exponent max_degree(const LaurentMatrix& m);

/// sum_i t^{c_i} E_{sigma(i), i}, optionally with signs on the columns.
LaurentMatrix lift(const AffinePermutation& w);
LaurentMatrix lift(const AffinePermutation& w, const std::vector<Rational>& column_scalars);

/// Drops scalar coefficients of a monomial matrix. Throws DomainError when the
/// support is not a permutation pattern of monomials or the orders do not sum to 0.
AffinePermutation apm(const LaurentMatrix& m);

enum class SubgroupKind { G0, Iwahori, Parahoric, OppositeIwahori };

/// For Parahoric, J lists the finite simple indices (1..n-1) generating W_P.
struct Subgroup {
  SubgroupKind kind = SubgroupKind::G0;
  std::vector<int> J;

  static Subgroup g0() { return {SubgroupKind::G0, {}}; }
  static Subgroup iwahori() { return {SubgroupKind::Iwahori, {}}; }
  static Subgroup parahoric(std::vector<int> J) { return {SubgroupKind::Parahoric, std::move(J)}; }
  static Subgroup opposite_iwahori() { return {SubgroupKind::OppositeIwahori, {}}; }
};

bool is_member(const LaurentMatrix& m, const Subgroup& group);

}  // namespace affcells
