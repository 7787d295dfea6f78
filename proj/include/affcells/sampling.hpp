#pragma once

// Random test inputs. Every generator draws from the engine it is handed.

#include <cstdint>
#include <random>

#include "affcells/affine_permutation.hpp"
#include "affcells/constructions.hpp"
#include "affcells/laurent_matrix.hpp"
#include "affcells/tableau.hpp"

namespace affcells {

using Rng = std::mt19937_64;

/// Product of word_length uniformly chosen simple reflections.
AffinePermutation random_affine_permutation(Rng& rng, int n, int word_length);

/// Product of `factors` elementary Iwahori generators: x_{ij}(f) with f in Q[t]
/// for i < j, f in tQ[t] for i > j, and invertible diagonal scalings. Exponents
/// stay in [0, max_exp].
LaurentMatrix random_iwahori(Rng& rng, int n, int factors, int max_exp);

/// Integer entries in [-bound, bound], first row rescaled so that det = 1.
/// Singular draws are discarded.
RationalMatrix random_sl(Rng& rng, int n, int bound);

/// Random element of P (block upper triangular) with det = 1.
RationalMatrix random_parabolic(Rng& rng, const ParabolicDescriptor& desc, int bound);

/// Random element of the nilradical u with entries in [-bound, bound].
RationalMatrix random_nilradical(Rng& rng, const ParabolicDescriptor& desc, int bound);

CotangentPoint random_point(Rng& rng, const ParabolicDescriptor& desc, int bound);

/// Random Laurent matrix with entries of at most `terms` terms, exponents in [lo, hi].
LaurentMatrix random_laurent_matrix(Rng& rng, int n, int terms, int lo, int hi);

}  // namespace affcells
