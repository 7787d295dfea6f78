#include "affcells/nilpotent.hpp"

#include "affcells/exact_linalg.hpp"

namespace affcells {

bool is_nilpotent(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return false;
  RationalMatrix power = m;
  for (Eigen::Index k = 1; k < m.rows(); ++k) power = power * m;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (power(i, j) != 0) return false;
  return true;
}

Partition jordan_type(const RationalMatrix& n_matrix) {
  if (!is_nilpotent(n_matrix)) throw DomainError("jordan_type needs a nilpotent matrix");
  const auto n = n_matrix.rows();
  std::vector<std::size_t> ranks{static_cast<std::size_t>(n)};
  RationalMatrix power = RationalMatrix::Identity(n, n);
  while (ranks.back() > 0) {
    power = power * n_matrix;
    ranks.push_back(rank(power));
  }
  // Blocks of size >= k number rank(N^{k-1}) - rank(N^k).
  std::vector<int> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
  return conjugate(Partition(at_least));
}

std::int64_t centralizer_dim(const RationalMatrix& z) {
  const Eigen::Index n = z.rows();
  // Unknown X(i, j) sits in column i * n + j; equation (i, j) of XZ - ZX in row i * n + j.
  RationalMatrix op = RationalMatrix::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto eq = i * n + j;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (z(k, j) != 0) op(eq, i * n + k) += z(k, j);
        if (z(i, k) != 0) op(eq, k * n + j) -= z(i, k);
      }
    }
  }
  return static_cast<std::int64_t>(nullity(op));
}

std::vector<int> block_indices(const ParabolicDescriptor& desc) {
  desc.validate();
  std::vector<int> block(desc.n + 1, 0);
  int k = 1;
  std::size_t next = 0;
  for (int x = 1; x <= desc.n; ++x) {
    block[x] = k;
    if (next < desc.d.size() && x == desc.d[next]) {
      ++k;
      ++next;
    }
  }
  return block;
}

bool in_nilradical_by_blocks(const RationalMatrix& y, const ParabolicDescriptor& desc) {
  if (y.rows() != desc.n || y.cols() != desc.n) return false;
  const auto block = block_indices(desc);
  for (int r = 1; r <= desc.n; ++r)
    for (int c = 1; c <= desc.n; ++c)
      if (y(r - 1, c - 1) != 0 && block[r] >= block[c]) return false;
  return true;
}

bool in_nilradical_by_flag(const RationalMatrix& y, const ParabolicDescriptor& desc) {
  if (y.rows() != desc.n || y.cols() != desc.n) return false;
  desc.validate();
  std::vector<int> dims{0};
  dims.insert(dims.end(), desc.d.begin(), desc.d.end());
  dims.push_back(desc.n);
  for (std::size_t k = 1; k < dims.size(); ++k) {
    // Y e_x must lie in V_{k-1} for every x <= d_k.
    for (int x = 1; x <= dims[k]; ++x) {
      for (int row = dims[k - 1] + 1; row <= desc.n; ++row) {
        if (y(row - 1, x - 1) != 0) return false;
      }
    }
  }
  return true;
}

bool in_parabolic(const RationalMatrix& p, const ParabolicDescriptor& desc) {
  if (p.rows() != desc.n || p.cols() != desc.n) return false;
  const auto block = block_indices(desc);
  for (int r = 1; r <= desc.n; ++r)
    for (int c = 1; c <= desc.n; ++c)
      if (p(r - 1, c - 1) != 0 && block[r] > block[c]) return false;
  return true;
}

}  // namespace affcells
