#pragma once

// The left-aligned tableau attached to a parabolic subgroup of SL_n.
//
// Row k holds the integers d_{k-1} < x <= d_k in increasing order. All row,
// column and entry indices exposed here are 1-based.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "affcells/partition.hpp"

namespace affcells {

/// Partial flag 0 < d_1 < ... < d_{r-1} < n. An empty d means P = G.
struct ParabolicDescriptor {
  int n = 0;
  std::vector<int> d;

  /// Throws DomainError on an invalid descriptor.
  void validate() const;

  /// Simple reflections generating W_P: {1..n-1} minus the d_i.
  std::vector<int> parabolic_generators() const;

  /// All descriptors of size n (2^{n-1} of them), ordered by d lexicographically.
  static std::vector<ParabolicDescriptor> all_for(int n);

  friend bool operator==(const ParabolicDescriptor&, const ParabolicDescriptor&) = default;
};

std::string to_string(const ParabolicDescriptor& desc);

class ParabolicTableau {
 public:
  explicit ParabolicTableau(ParabolicDescriptor desc);

  const ParabolicDescriptor& descriptor() const { return desc_; }
  int n() const { return desc_.n; }
  /// Number of rows r (equals nu_1).
  int r() const { return static_cast<int>(lambda_.size()); }
  /// Number of columns s (equals max lambda_i).
  int s() const { return nu_.size(); }

  const std::vector<int>& lambda() const { return lambda_; }
  const Partition& nu() const { return nu_; }

  /// f(i, j): the j-th entry from the top of column i.
  int f(int column, int depth) const;
  /// Inverse of f: entry -> (column, depth).
  std::pair<int, int> position(int entry) const;
  /// Row of the tableau containing entry.
  int row_of(int entry) const { return row_of_[entry]; }

  const std::vector<int>& row(int k) const { return rows_[k - 1]; }
  const std::vector<int>& column(int i) const { return columns_[i - 1]; }

  /// Column tops, sorted increasingly.
  const std::vector<int>& s1() const { return s1_; }
  /// Entries that are not column tops, sorted increasingly.
  const std::vector<int>& s2() const { return s2_; }
  std::vector<int> s1_of_row(int k) const;
  std::vector<int> s2_of_row(int k) const;

  const std::vector<int>& red_of_row(int k) const { return red_rows_[k - 1]; }
  const std::vector<int>& blue_of_row(int k) const { return blue_rows_[k - 1]; }
  const std::vector<int>& red() const { return red_; }
  const std::vector<int>& blue() const { return blue_; }

  /// l(1) < ... < l(s): Red in increasing order.
  const std::vector<int>& l_seq() const { return l_seq_; }
  /// m(1..n-s): Blue read row by row from the bottom, each row left to right.
  const std::vector<int>& m_seq() const { return m_seq_; }
  /// t(1..n-s): an enumeration of S2 with t(i) in the row of m(i).
  const std::vector<int>& t_seq() const { return t_seq_; }

  int l(int i) const { return l_seq_[i - 1]; }
  int m(int i) const { return m_seq_[i - 1]; }
  int t(int i) const { return t_seq_[i - 1]; }

  /// iota(f(i, j)) = f(i, j - 1), defined on S2.
  int iota(int entry) const;

  /// True when the interval formula d_{k-1} < j <= d_k - max{lambda_j : j < k}
  /// disagrees with Red(k) for some row k.
  bool red_closed_form_differs() const { return red_closed_form_differs_; }

  /// Rows as text, one line per row.
  std::string render() const;

 private:
  ParabolicDescriptor desc_;
  std::vector<int> lambda_;
  Partition nu_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::vector<int>> columns_;
  std::vector<int> row_of_;
  std::vector<std::pair<int, int>> position_;
  std::vector<int> s1_;
  std::vector<int> s2_;
  std::vector<std::vector<int>> red_rows_;
  std::vector<std::vector<int>> blue_rows_;
  std::vector<int> red_;
  std::vector<int> blue_;
  std::vector<int> l_seq_;
  std::vector<int> m_seq_;
  std::vector<int> t_seq_;
  std::vector<int> iota_;
  bool red_closed_form_differs_ = false;
};

inline ParabolicTableau build_tableau(const ParabolicDescriptor& desc) { return ParabolicTableau(desc); }

/// dim G/P as sum_{i<j} lambda_i lambda_j; checked against (n^2 - sum lambda_i^2) / 2.
std::int64_t dim_g_mod_p(const ParabolicTableau& tab);

}  // namespace affcells
