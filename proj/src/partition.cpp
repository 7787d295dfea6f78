#include "affcells/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "affcells/scalar.hpp"

namespace affcells {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (int i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.parts()[i];
  return os << ')';
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Partition partition_from_unsorted(std::vector<int> values) {
  std::erase(values, 0);
  std::sort(values.begin(), values.end(), std::greater<>());
  return Partition(std::move(values));
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  const int longest = p.empty() ? 0 : p.parts().front();
  out.reserve(longest);
  for (int i = 1; i <= longest; ++i) {
    int count = 0;
    for (int part : p.parts()) count += part >= i ? 1 : 0;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
  if (mu.total() != nu.total()) throw DomainError("dominance order compares partitions of the same total");
  const int length = std::max(mu.size(), nu.size());
  int mu_prefix = 0;
  int nu_prefix = 0;
  for (int i = 1; i <= length; ++i) {
    mu_prefix += mu.part(i);
    nu_prefix += nu.part(i);
    if (mu_prefix > nu_prefix) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of expects n >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  // Parts bounded above by `limit`, remaining sum `rest`.
  std::function<void(int, int)> extend = [&](int rest, int limit) {
    if (rest == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(rest, limit); part >= 1; --part) {
      current.push_back(part);
      extend(rest - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

PartitionIdentity evaluate_partition_identity(const Partition& p) {
  PartitionIdentity result;

  for (int part : p.parts()) result.sum_of_squares += static_cast<std::int64_t>(part) * part;

  const Partition conj = conjugate(p);
  for (int a : conj.parts())
    for (int b : conj.parts()) result.min_double_sum += std::min(a, b);

  // Column heights read off the box set of the Young diagram.
  std::set<std::pair<int, int>> boxes;
  for (int row = 0; row < p.size(); ++row)
    for (int col = 0; col < p.parts()[row]; ++col) boxes.emplace(col, row);
  std::vector<std::int64_t> heights;
  for (const auto& [col, row] : boxes) {
    if (static_cast<int>(heights.size()) <= col) heights.resize(col + 1, 0);
    ++heights[col];
  }
  for (std::size_t i = 0; i < heights.size(); ++i) {
    result.weighted_conjugate_sum += static_cast<std::int64_t>(2 * (i + 1) - 1) * heights[i];
  }
  return result;
}

}  // namespace affcells
