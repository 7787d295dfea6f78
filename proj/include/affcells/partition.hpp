#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace affcells {

/// A weakly decreasing sequence of positive integers, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }
  bool empty() const { return parts_.empty(); }

  /// 1-based part access; zero beyond the last part.
  int part(int i) const { return (i >= 1 && i <= size()) ? parts_[i - 1] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::string to_string(const Partition& p);

/// Sorts arbitrary nonnegative values into a partition, dropping zeros.
Partition partition_from_unsorted(std::vector<int> values);

Partition conjugate(const Partition& p);

/// Prefix-sum dominance mu <= nu. Throws DomainError when the totals differ.
bool dominance_leq(const Partition& mu, const Partition& nu);

/// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);

/// The three sides of sum nu_i^2 = sum_i sum_j min(nu'_i, nu'_j) = sum (2i-1) nu'_i.
struct PartitionIdentity {
  std::int64_t sum_of_squares = 0;
  std::int64_t min_double_sum = 0;
  std::int64_t weighted_conjugate_sum = 0;

  bool holds() const {
    return sum_of_squares == min_double_sum && min_double_sum == weighted_conjugate_sum;
  }
};

/// Evaluates the three expressions along separate code paths.
PartitionIdentity evaluate_partition_identity(const Partition& p);

inline bool verify_partition_identity(const Partition& p) {
  return evaluate_partition_identity(p).holds();
}

}  // namespace affcells
