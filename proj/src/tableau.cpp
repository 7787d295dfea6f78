#include "affcells/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "affcells/scalar.hpp"

namespace affcells {

void ParabolicDescriptor::validate() const {
  if (n < 1) throw DomainError("descriptor needs n >= 1");
  int previous = 0;
  for (int di : d) {
    if (di <= previous || di >= n) {
      throw DomainError("descriptor needs 0 < d_1 < ... < d_{r-1} < n, got " + to_string(*this));
    }
    previous = di;
  }
}

std::vector<int> ParabolicDescriptor::parabolic_generators() const {
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    if (std::find(d.begin(), d.end(), i) == d.end()) out.push_back(i);
  }
  return out;
}

std::vector<ParabolicDescriptor> ParabolicDescriptor::all_for(int n) {
  std::vector<ParabolicDescriptor> out;
  const int interior = std::max(n - 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << interior); ++mask) {
    ParabolicDescriptor desc{n, {}};
    for (int i = 1; i <= interior; ++i) {
      if (mask & (1u << (i - 1))) desc.d.push_back(i);
    }
    out.push_back(std::move(desc));
  }
  std::sort(out.begin(), out.end(),
            [](const ParabolicDescriptor& a, const ParabolicDescriptor& b) { return a.d < b.d; });
  return out;
}

std::string to_string(const ParabolicDescriptor& desc) {
  std::ostringstream os;
  os << "n=" << desc.n << " d=(";
  for (std::size_t i = 0; i < desc.d.size(); ++i) os << (i ? "," : "") << desc.d[i];
  os << ')';
  return os.str();
}

ParabolicTableau::ParabolicTableau(ParabolicDescriptor desc) : desc_(std::move(desc)) {
  desc_.validate();
  const int n = desc_.n;

  std::vector<int> bounds{0};
  bounds.insert(bounds.end(), desc_.d.begin(), desc_.d.end());
  bounds.push_back(n);
  for (std::size_t k = 1; k < bounds.size(); ++k) {
    lambda_.push_back(bounds[k] - bounds[k - 1]);
    std::vector<int> entries;
    for (int x = bounds[k - 1] + 1; x <= bounds[k]; ++x) entries.push_back(x);
    rows_.push_back(std::move(entries));
  }

  const int columns = *std::max_element(lambda_.begin(), lambda_.end());
  columns_.assign(columns, {});
  row_of_.assign(n + 1, 0);
  position_.assign(n + 1, {0, 0});
  for (int k = 1; k <= r(); ++k) {
    const auto& entries = rows_[k - 1];
    for (std::size_t c = 0; c < entries.size(); ++c) {
      columns_[c].push_back(entries[c]);
      row_of_[entries[c]] = k;
      position_[entries[c]] = {static_cast<int>(c) + 1, static_cast<int>(columns_[c].size())};
    }
  }
  std::vector<int> heights;
  for (const auto& col : columns_) heights.push_back(static_cast<int>(col.size()));
  nu_ = Partition(heights);

  for (const auto& col : columns_) s1_.push_back(col.front());
  std::sort(s1_.begin(), s1_.end());
  for (int x = 1; x <= n; ++x) {
    if (position_[x].second > 1) s2_.push_back(x);
  }

  int widest_above = 0;
  for (int k = 1; k <= r(); ++k) {
    const auto& entries = rows_[k - 1];
    const auto tops = s1_of_row(k).size();
    std::vector<int> red_k(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(tops));
    std::vector<int> blue_k(entries.begin() + static_cast<std::ptrdiff_t>(tops), entries.end());

    std::vector<int> closed_form;
    for (int j = bounds[k - 1] + 1; j <= bounds[k] - widest_above; ++j) closed_form.push_back(j);
    if (closed_form != red_k) red_closed_form_differs_ = true;
    widest_above = std::max(widest_above, lambda_[k - 1]);

    red_.insert(red_.end(), red_k.begin(), red_k.end());
    blue_.insert(blue_.end(), blue_k.begin(), blue_k.end());
    red_rows_.push_back(std::move(red_k));
    blue_rows_.push_back(std::move(blue_k));
  }
  std::sort(red_.begin(), red_.end());
  std::sort(blue_.begin(), blue_.end());
  l_seq_ = red_;

  iota_.assign(n + 1, 0);
  for (int x : s2_) {
    const auto [c, depth] = position_[x];
    iota_[x] = columns_[c - 1][depth - 2];
  }

  for (int k = r(); k >= 1; --k) {
    const auto& blue_k = blue_rows_[k - 1];
    const auto s2_k = s2_of_row(k);
    m_seq_.insert(m_seq_.end(), blue_k.begin(), blue_k.end());
    t_seq_.insert(t_seq_.end(), s2_k.begin(), s2_k.end());
  }
}

int ParabolicTableau::f(int column, int depth) const {
  if (column < 1 || column > s() || depth < 1 || depth > nu_.part(column)) {
    throw DomainError("f(i, j) outside the tableau");
  }
  return columns_[column - 1][depth - 1];
}

std::pair<int, int> ParabolicTableau::position(int entry) const {
  if (entry < 1 || entry > n()) throw DomainError("entry outside 1..n");
  return position_[entry];
}

std::vector<int> ParabolicTableau::s1_of_row(int k) const {
  std::vector<int> out;
  for (int x : s1_)
    if (row_of_[x] == k) out.push_back(x);
  return out;
}

std::vector<int> ParabolicTableau::s2_of_row(int k) const {
  std::vector<int> out;
  for (int x : s2_)
    if (row_of_[x] == k) out.push_back(x);
  return out;
}

int ParabolicTableau::iota(int entry) const {
  if (entry < 1 || entry > n() || iota_[entry] == 0) throw DomainError("iota is defined on S2 only");
  return iota_[entry];
}

std::string ParabolicTableau::render() const {
  std::size_t width = std::to_string(n()).size();
  std::ostringstream os;
  for (const auto& entries : rows_) {
    for (std::size_t c = 0; c < entries.size(); ++c) {
      const auto text = std::to_string(entries[c]);
      os << (c ? " " : "") << std::string(width - text.size(), ' ') << text;
    }
    os << '\n';
  }
  return os.str();
}

std::int64_t dim_g_mod_p(const ParabolicTableau& tab) {
  const auto& lambda = tab.lambda();
  std::int64_t pairwise = 0;
  std::int64_t squares = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    squares += static_cast<std::int64_t>(lambda[i]) * lambda[i];
    for (std::size_t j = i + 1; j < lambda.size(); ++j) pairwise += static_cast<std::int64_t>(lambda[i]) * lambda[j];
  }
  const std::int64_t n = tab.n();
  if (2 * pairwise != n * n - squares) throw std::logic_error("dim G/P formulas disagree");
  return pairwise;
}

}  // namespace affcells
