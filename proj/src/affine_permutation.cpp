#include "affcells/affine_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "affcells/scalar.hpp"

namespace affcells {

namespace {

// Floor division for possibly negative numerators.
Exponent floor_div(Exponent a, Exponent b) {
  Exponent q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Residue in 1..n.
int residue(Exponent v, int n) { return static_cast<int>(v - n * floor_div(v - 1, n)); }

// (a, b) + k delta for the pair of integers (x, y).
AffineRoot root_of_pair(Exponent x, Exponent y, int n) {
  const int a = residue(x, n);
  const int b = residue(y, n);
  const Exponent p = (a - x) / n;
  const Exponent p_prime = (b - y) / n;
  // x = a - n p and epsilon_{a - n p} = epsilon_a + p delta.
  return AffineRoot::real(a, b, p - p_prime);
}

}  // namespace

AffinePermutation::AffinePermutation(std::vector<int> sigma, std::vector<Exponent> exps)
    : sigma_(std::move(sigma)), exps_(std::move(exps)) {
  const int n = static_cast<int>(sigma_.size());
  if (n < 1 || exps_.size() != sigma_.size()) throw DomainError("affine permutation needs matching sizes");
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma_) {
    if (v < 1 || v > n || seen[v]) throw DomainError("sigma is not a permutation of 1..n");
    seen[v] = true;
  }
  if (std::accumulate(exps_.begin(), exps_.end(), Exponent{0}) != 0) {
    throw DomainError("exponents of an affine permutation must sum to zero");
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  return AffinePermutation(std::move(sigma), std::vector<Exponent>(n, 0));
}

AffinePermutation AffinePermutation::from_window(const std::vector<Exponent>& window) {
  const int n = static_cast<int>(window.size());
  if (n < 1) throw DomainError("empty window");
  std::vector<int> sigma(n);
  std::vector<Exponent> exps(n);
  for (int i = 0; i < n; ++i) {
    sigma[i] = residue(window[i], n);
    exps[i] = (sigma[i] - window[i]) / n;
  }
  return AffinePermutation(std::move(sigma), std::move(exps));
}

Exponent AffinePermutation::operator()(Exponent i) const {
  const int r = residue(i, n());
  const Exponent shift = (i - r) / n();
  return sigma_[r - 1] - n() * exps_[r - 1] + n() * shift;
}

Exponent AffinePermutation::preimage(Exponent v) const {
  return inverse(*this)(v);
}

std::vector<Exponent> AffinePermutation::window() const {
  std::vector<Exponent> out(n());
  for (int i = 1; i <= n(); ++i) out[i - 1] = (*this)(i);
  return out;
}

bool AffinePermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (sigma_[i] != i + 1 || exps_[i] != 0) return false;
  return true;
}

bool AffinePermutation::is_finite() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent c) { return c == 0; });
}

AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.n() != v.n()) throw DomainError("rank mismatch in product");
  const int n = u.n();
  std::vector<int> sigma(n);
  std::vector<Exponent> exps(n);
  for (int j = 1; j <= n; ++j) {
    const int mid = v.sigma(j);
    sigma[j - 1] = u.sigma(mid);
    exps[j - 1] = v.exp(j) + u.exp(mid);
  }
  return AffinePermutation(std::move(sigma), std::move(exps));
}

AffinePermutation inverse(const AffinePermutation& w) {
  const int n = w.n();
  std::vector<int> sigma(n);
  std::vector<Exponent> exps(n);
  for (int i = 1; i <= n; ++i) {
    sigma[w.sigma(i) - 1] = i;
    exps[w.sigma(i) - 1] = -w.exp(i);
  }
  return AffinePermutation(std::move(sigma), std::move(exps));
}

AffinePermutation simple_reflection(int n, int i) {
  if (n < 2 || i < 0 || i >= n) throw DomainError("simple reflection index out of range");
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<Exponent> exps(n, 0);
  if (i == 0) {
    std::swap(sigma[0], sigma[n - 1]);
    exps[0] = 1;
    exps[n - 1] = -1;
  } else {
    std::swap(sigma[i - 1], sigma[i]);
  }
  return AffinePermutation(std::move(sigma), std::move(exps));
}

AffinePermutation reflection(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) throw DomainError("reflection needs 1 <= a != b <= n");
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::swap(sigma[a - 1], sigma[b - 1]);
  return AffinePermutation(std::move(sigma), std::vector<Exponent>(n, 0));
}

AffinePermutation from_word(int n, const std::vector<int>& word) {
  auto w = AffinePermutation::identity(n);
  for (int i : word) w = w * simple_reflection(n, i);
  return w;
}

std::string window_string(const AffinePermutation& w) {
  std::ostringstream os;
  os << '[';
  const auto win = w.window();
  for (std::size_t i = 0; i < win.size(); ++i) os << (i ? "," : "") << win[i];
  os << ']';
  return os.str();
}

std::string matrix_string(const AffinePermutation& w) {
  std::ostringstream os;
  for (int i = 1; i <= w.n(); ++i) {
    os << (i > 1 ? " " : "") << "t^" << w.exp(i) << "@(" << w.sigma(i) << ',' << i << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AffinePermutation& w) { return os << window_string(w); }

std::int64_t length(const AffinePermutation& w) {
  const int n = w.n();
  const auto win = w.window();
  std::int64_t count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j0 = 1; j0 <= n; ++j0) {
      // j = j0 + n k with j > i and w(j0) + n k < w(i).
      const Exponent k_min = floor_div(i - j0, n) + 1;
      const Exponent diff = win[i - 1] - win[j0 - 1];
      const Exponent k_max = floor_div(diff - 1, n);
      if (k_max >= k_min) count += k_max - k_min + 1;
    }
  }
  return count;
}

bool has_right_descent(const AffinePermutation& w, int i) {
  if (i < 0 || i >= w.n()) throw DomainError("simple index out of range");
  return w(i) > w(i + 1);
}

bool has_left_descent(const AffinePermutation& w, int i) {
  if (i < 0 || i >= w.n()) throw DomainError("simple index out of range");
  const auto inv = inverse(w);
  return inv(i) > inv(i + 1);
}

Coroot::Coroot(std::vector<Exponent> z) : z_(std::move(z)) {
  if (std::accumulate(z_.begin(), z_.end(), Exponent{0}) != 0) throw DomainError("coroot entries must sum to zero");
}

Exponent root_value(const Coroot& q, int a, int b) { return q[a] - q[b]; }

AffinePermutation tau(const Coroot& q) {
  std::vector<Exponent> exps(q.values().size());
  std::transform(q.values().begin(), q.values().end(), exps.begin(), [](Exponent z) { return -z; });
  auto w = AffinePermutation::identity(q.n());
  return AffinePermutation(w.sigma(), std::move(exps));
}

std::int64_t translation_length(const Coroot& q) {
  std::int64_t total = 0;
  for (int a = 1; a <= q.n(); ++a)
    for (int b = a + 1; b <= q.n(); ++b) {
      const auto v = root_value(q, a, b);
      total += v < 0 ? -v : v;
    }
  return total;
}

AffineRoot AffineRoot::imaginary(Exponent level) {
  if (level == 0) throw DomainError("imaginary roots have nonzero level");
  return {level, std::nullopt};
}

bool AffineRoot::is_positive() const {
  if (level != 0) return level > 0;
  return real_part && real_part->first < real_part->second;
}

AffineRoot AffineRoot::simple(int n, int i) {
  if (i < 0 || i >= n) throw DomainError("simple root index out of range");
  if (i == 0) return real(n, 1, 1);
  return real(i, i + 1, 0);
}

std::ostream& operator<<(std::ostream& os, const AffineRoot& root) {
  if (root.real_part) os << '(' << root.real_part->first << ',' << root.real_part->second << ')';
  if (root.level != 0 || !root.real_part) os << (root.real_part ? " + " : "") << root.level << "d";
  return os;
}

AffineRoot act_on_root(const AffinePermutation& w, const AffineRoot& beta) {
  if (!beta.real_part) return beta;
  const auto [a, b] = *beta.real_part;
  if (a < 1 || b < 1 || a > w.n() || b > w.n() || a == b) throw DomainError("root indices out of range");
  // k delta + (a, b) corresponds to the integer pair (a, b + n k).
  return root_of_pair(w(a), w(b + w.n() * beta.level), w.n());
}

namespace {
void require_positive_real(const AffineRoot& beta) {
  if (!beta.is_real() || !beta.is_positive()) throw DomainError("descent test needs a positive real root");
}
}  // namespace

bool is_right_descent(const AffinePermutation& w, const AffineRoot& beta) {
  require_positive_real(beta);
  return !act_on_root(w, beta).is_positive();
}

bool is_left_descent(const AffinePermutation& w, const AffineRoot& beta) {
  require_positive_real(beta);
  return !act_on_root(inverse(w), beta).is_positive();
}

}  // namespace affcells
