#pragma once

// The affine Weyl group of type A_{n-1}^{(1)}.
//
// An element is stored as the monomial matrix sum_i t^{c_i} E_{sigma(i), i}:
// column i holds t^{c_i} in row sigma(i). The window view is
// w(i) = sigma(i) - n c_i, extended by w(i + n) = w(i) + n. This choice gives
// s_0 (t^{-1} at (1,n), t at (n,1)) length 1.

#include <cstdint>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace affcells {

using Exponent = std::int64_t;

class AffinePermutation {
 public:
  AffinePermutation() = default;
  /// sigma holds 1-based images; throws DomainError unless sigma is a
  /// permutation of {1..n} and the exponents sum to zero.
  AffinePermutation(std::vector<int> sigma, std::vector<Exponent> exps);

  static AffinePermutation identity(int n);
  /// Throws DomainError unless the residues mod n form a permutation and
  /// sum (w(i) - i) = 0.
  static AffinePermutation from_window(const std::vector<Exponent>& window);

  int n() const { return static_cast<int>(sigma_.size()); }
  int sigma(int i) const { return sigma_[i - 1]; }
  Exponent exp(int i) const { return exps_[i - 1]; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<Exponent>& exps() const { return exps_; }

  /// w(i) for any integer i.
  Exponent operator()(Exponent i) const;
  /// w^{-1}(v) for any integer v.
  Exponent preimage(Exponent v) const;
  std::vector<Exponent> window() const;

  bool is_identity() const;
  /// True when every exponent is zero, i.e. the element lies in the finite Weyl group.
  bool is_finite() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation& a, const AffinePermutation& b) {
    if (auto c = a.sigma_ <=> b.sigma_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<int> sigma_;
  std::vector<Exponent> exps_;
};

AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v);
AffinePermutation inverse(const AffinePermutation& w);

/// s_i for 0 <= i <= n-1.
AffinePermutation simple_reflection(int n, int i);
/// The finite reflection s_{(a,b)}; only level-zero roots are accepted.
AffinePermutation reflection(int n, int a, int b);
/// Product s_{word[0]} s_{word[1]} ...
AffinePermutation from_word(int n, const std::vector<int>& word);

std::string window_string(const AffinePermutation& w);
/// "t^c@(row,col)" terms ordered by column.
std::string matrix_string(const AffinePermutation& w);
std::ostream& operator<<(std::ostream& os, const AffinePermutation& w);

/// Coxeter length, counted as #{(i, j) : 1 <= i <= n, i < j, w(i) > w(j)}.
std::int64_t length(const AffinePermutation& w);

/// Right descent at simple index i: w s_i < w.
bool has_right_descent(const AffinePermutation& w, int i);
/// Left descent at simple index i: s_i w < w.
bool has_left_descent(const AffinePermutation& w, int i);

/// A coroot-lattice vector (z_1..z_n) with zero sum.
class Coroot {
 public:
  Coroot() = default;
  explicit Coroot(std::vector<Exponent> z);
  int n() const { return static_cast<int>(z_.size()); }
  Exponent operator[](int i) const { return z_[i - 1]; }
  const std::vector<Exponent>& values() const { return z_; }
  friend bool operator==(const Coroot&, const Coroot&) = default;

 private:
  std::vector<Exponent> z_;
};

/// alpha(q) for alpha = (a, b), i.e. q_a - q_b = ord(t_b) - ord(t_a) on tau_q.
Exponent root_value(const Coroot& q, int a, int b);

/// tau_q, whose matrix is sum_i t^{-q_i} E_{ii}.
AffinePermutation tau(const Coroot& q);

/// sum over positive finite roots of |alpha(q)|.
std::int64_t translation_length(const Coroot& q);

/// k delta + (a, b), or the imaginary root k delta when the pair is absent.
struct AffineRoot {
  Exponent level = 0;
  std::optional<std::pair<int, int>> real_part;

  static AffineRoot real(int a, int b, Exponent level = 0) { return {level, std::make_pair(a, b)}; }
  static AffineRoot imaginary(Exponent level);

  bool is_real() const { return real_part.has_value(); }
  bool is_positive() const;
  /// The simple root alpha_i, 0 <= i < n.
  static AffineRoot simple(int n, int i);

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

std::ostream& operator<<(std::ostream& os, const AffineRoot& root);

AffineRoot act_on_root(const AffinePermutation& w, const AffineRoot& beta);

/// w s_beta < w, decided by the sign of w(beta). Throws DomainError unless beta is
/// a positive real root.
bool is_right_descent(const AffinePermutation& w, const AffineRoot& beta);
/// s_beta w < w, decided by the sign of w^{-1}(beta).
bool is_left_descent(const AffinePermutation& w, const AffineRoot& beta);

}  // namespace affcells
