#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affcells/affine_permutation.hpp"

namespace affcells {

/// v <= w in Bruhat order.
///
/// Follows the lifting recursion: take a left descent s of w; if s is also a
/// left descent of v compare (sv, sw), otherwise compare (v, sw). Each step
/// drops l(w) by one and never branches.
bool bruhat_leq(const AffinePermutation& v, const AffinePermutation& w);

inline bool bruhat_less(const AffinePermutation& v, const AffinePermutation& w) {
  return v != w && bruhat_leq(v, w);
}

enum class Side { Left, Right };

/// Minimal-length element of w W_J (Side::Right) or W_J w (Side::Left).
/// J lists simple indices in 0..n-1.
AffinePermutation min_coset_rep(const AffinePermutation& w, const std::vector<int>& J, Side side);

/// A reduced word, obtained by peeling right descents with the smallest index first.
std::vector<int> reduced_word(const AffinePermutation& w);

/// One verified relation x < y, with the lengths that certify it.
struct BruhatRelation {
  std::string lower_name;
  std::string upper_name;
  AffinePermutation lower;
  AffinePermutation upper;
  std::int64_t lower_length = 0;
  std::int64_t upper_length = 0;
  bool holds = false;
};

/// Report for the two-sided reflection analysis of w = sigma tau (matrix
/// sum_i t_i E_{sigma(i), i}) with s_r = s_{(a,b)}, s_l = s_{(sigma(a), sigma(b))}.
struct TableCaseReport {
  int case_number = 0;
  AffinePermutation w;
  AffinePermutation s_l_w;
  AffinePermutation w_s_r;
  AffinePermutation s_l_w_s_r;
  /// Unique minimal element of {w, s_l w} (case 1) or {w, s_l w, w s_r, s_l w s_r} (case 2).
  AffinePermutation minimal;
  std::vector<BruhatRelation> chains;
  /// Case 1: s_l w == w s_r. Case 2: s_l w != w s_r.
  bool commutation_as_expected = false;
  /// True when the minimum is unique and every listed relation holds.
  bool verified = false;
};

/// Throws DomainError unless 1 <= a < b <= n.
TableCaseReport table_case(const AffinePermutation& w, int a, int b);

}  // namespace affcells
