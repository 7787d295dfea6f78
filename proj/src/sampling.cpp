#include "affcells/sampling.hpp"

#include "affcells/exact_linalg.hpp"
#include "affcells/nilpotent.hpp"

namespace affcells {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational nonzero_small(Rng& rng, int bound) {
  int v = 0;
  while (v == 0) v = uniform(rng, -bound, bound);
  return Rational(v);
}

Laurent random_poly(Rng& rng, int lo, int hi, int terms) {
  Laurent p;
  for (int k = 0; k < terms; ++k) p.add_term(uniform(rng, lo, hi), Rational(uniform(rng, -3, 3)));
  return p;
}

}  // namespace

AffinePermutation random_affine_permutation(Rng& rng, int n, int word_length) {
  auto w = AffinePermutation::identity(n);
  for (int k = 0; k < word_length; ++k) w = w * simple_reflection(n, uniform(rng, 0, n - 1));
  return w;
}

LaurentMatrix random_iwahori(Rng& rng, int n, int factors, int max_exp) {
  auto m = laurent_identity(n);
  for (int step = 0; step < factors; ++step) {
    auto x = laurent_identity(n);
    const int i = uniform(rng, 0, n - 1);
    const int j = uniform(rng, 0, n - 1);
    if (i == j) {
      x(i, i) = Laurent(nonzero_small(rng, 3));
    } else {
      const int lowest = i < j ? 0 : 1;
      x(i, j) = random_poly(rng, lowest, std::max(lowest, max_exp), uniform(rng, 1, 2));
    }
    m = multiply(m, x);
  }
  return m;
}

RationalMatrix random_sl(Rng& rng, int n, int bound) {
  while (true) {
    RationalMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = uniform(rng, -bound, bound);
    const Rational det = determinant(g);
    if (det == 0) continue;
    g.row(0) /= det;
    return g;
  }
}

RationalMatrix random_parabolic(Rng& rng, const ParabolicDescriptor& desc, int bound) {
  const auto block = block_indices(desc);
  while (true) {
    RationalMatrix p = RationalMatrix::Zero(desc.n, desc.n);
    for (int r = 1; r <= desc.n; ++r)
      for (int c = 1; c <= desc.n; ++c)
        if (block[r] <= block[c]) p(r - 1, c - 1) = uniform(rng, -bound, bound);
    const Rational det = determinant(p);
    if (det == 0) continue;
    p.row(0) /= det;
    return p;
  }
}

RationalMatrix random_nilradical(Rng& rng, const ParabolicDescriptor& desc, int bound) {
  const auto block = block_indices(desc);
  RationalMatrix y = RationalMatrix::Zero(desc.n, desc.n);
  for (int r = 1; r <= desc.n; ++r)
    for (int c = 1; c <= desc.n; ++c)
      if (block[r] < block[c]) y(r - 1, c - 1) = uniform(rng, -bound, bound);
  return y;
}

CotangentPoint random_point(Rng& rng, const ParabolicDescriptor& desc, int bound) {
  CotangentPoint pt;
  pt.g = random_sl(rng, desc.n, bound);
  pt.y = random_nilradical(rng, desc, bound);
  return pt;
}

LaurentMatrix random_laurent_matrix(Rng& rng, int n, int terms, int lo, int hi) {
  LaurentMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_poly(rng, lo, hi, uniform(rng, 0, terms));
  return m;
}

}  // namespace affcells
