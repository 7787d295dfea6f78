#pragma once

// Reference implementations used only by the tests. Each one takes a route
// that shares no code with the library function it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "affcells/affine_permutation.hpp"
#include "affcells/laurent_matrix.hpp"

namespace oracle {

using affcells::AffinePermutation;
using affcells::Exponent;

/// Inversions counted by scanning j over a window wide enough to hold all of them.
inline std::int64_t brute_length(const AffinePermutation& w) {
  const int n = w.n();
  Exponent spread = 0;
  for (int i = 1; i <= n; ++i) spread = std::max<Exponent>(spread, std::abs(w(i) - i));
  std::int64_t count = 0;
  for (int i = 1; i <= n; ++i)
    for (Exponent j = i + 1; j <= i + 2 * spread + n; ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

/// Word length after repeatedly removing the first right descent found on the window.
inline std::int64_t descent_word_length(AffinePermutation w) {
  const int n = w.n();
  std::int64_t steps = 0;
  while (true) {
    auto win = w.window();
    int found = -1;
    // w(0) = w(n) - n.
    if (win[n - 1] - n > win[0]) found = 0;
    for (int i = 1; i < n && found < 0; ++i)
      if (win[i - 1] > win[i]) found = i;
    if (found < 0) return steps;
    // Right multiplication by s_i swaps window positions i and i+1.
    if (found == 0) {
      win[0] += n;
      win[n - 1] -= n;
      std::swap(win[0], win[n - 1]);
    } else {
      std::swap(win[found - 1], win[found]);
    }
    w = AffinePermutation::from_window(win);
    ++steps;
  }
}

/// All products of subwords of `word`.
inline std::set<AffinePermutation> subword_products(int n, const std::vector<int>& word) {
  std::set<AffinePermutation> out;
  const std::size_t k = word.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    auto w = AffinePermutation::identity(n);
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) w = w * affcells::simple_reflection(n, word[i]);
    out.insert(w);
  }
  return out;
}

/// The affine reflection exchanging a and b + n k, as a window.
inline AffinePermutation affine_reflection(int n, int a, int b, Exponent k) {
  std::vector<Exponent> win(n);
  std::iota(win.begin(), win.end(), Exponent{1});
  win[a - 1] = b + n * k;
  win[b - 1] = a - n * k;
  return AffinePermutation::from_window(win);
}

/// Every element of length <= max_length, by breadth-first search on right multiplication.
inline std::vector<AffinePermutation> ball(int n, int max_length) {
  std::set<AffinePermutation> seen{AffinePermutation::identity(n)};
  std::vector<AffinePermutation> frontier{AffinePermutation::identity(n)};
  std::vector<AffinePermutation> all = frontier;
  for (int len = 1; len <= max_length; ++len) {
    std::vector<AffinePermutation> next;
    for (const auto& w : frontier)
      for (int i = 0; i < n; ++i) {
        auto u = w * affcells::simple_reflection(n, i);
        if (seen.insert(u).second) next.push_back(u);
      }
    // Elements found at distance len from the identity have length len.
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

/// Leibniz expansion of the determinant.
inline affcells::Laurent leibniz_det(const affcells::LaurentMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  affcells::Laurent total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    affcells::Laurent term(1);
    for (int i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Direct-sum Jordan form with blocks of the given sizes (upper shift inside each block).
inline affcells::RationalMatrix jordan_matrix(const std::vector<int>& blocks) {
  const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  affcells::RationalMatrix m = affcells::RationalMatrix::Zero(n, n);
  int offset = 0;
  for (int b : blocks) {
    for (int i = 0; i + 1 < b; ++i) m(offset + i, offset + i + 1) = 1;
    offset += b;
  }
  return m;
}

}  // namespace oracle
