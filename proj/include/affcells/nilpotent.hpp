#pragma once

#include <cstdint>
#include <vector>

#include "affcells/partition.hpp"
#include "affcells/scalar.hpp"
#include "affcells/tableau.hpp"

namespace affcells {

bool is_nilpotent(const RationalMatrix& m);

/// Jordan type recovered from the ranks of N^0, N^1, ..., N^n.
/// Throws DomainError when N is not nilpotent.
Partition jordan_type(const RationalMatrix& n_matrix);

/// dim {X : XZ = ZX}, as the nullity of X -> XZ - ZX on gl_n.
std::int64_t centralizer_dim(const RationalMatrix& z);

/// 1-based block of each index for the descriptor: block(x) = k iff d_{k-1} < x <= d_k.
std::vector<int> block_indices(const ParabolicDescriptor& desc);

/// Y lies in the nilradical u: entries only where block(row) < block(col).
bool in_nilradical_by_blocks(const RationalMatrix& y, const ParabolicDescriptor& desc);

/// Y lies in u, tested as Y(V_k) subset V_{k-1} on the flag V_k = span(e_1..e_{d_k}).
bool in_nilradical_by_flag(const RationalMatrix& y, const ParabolicDescriptor& desc);

/// The constant-term pattern of the parabolic P: block(row) <= block(col).
bool in_parabolic(const RationalMatrix& p, const ParabolicDescriptor& desc);

}  // namespace affcells
