#pragma once

// Laurent polynomials in one variable t with coefficients in an exact field.

#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <utility>

#include "affcells/scalar.hpp"

namespace affcells {

template <typename Scalar>
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, Scalar>;

  /// valuation() of the zero polynomial.
  static constexpr Exponent kInfiniteValuation = std::numeric_limits<Exponent>::max();
  /// degree() of the zero polynomial.
  static constexpr Exponent kNegativeInfiniteDegree = std::numeric_limits<Exponent>::min();

  LaurentPoly() = default;
  LaurentPoly(int constant) { add_term(0, Scalar(constant)); }
  LaurentPoly(const Scalar& constant) { add_term(0, constant); }

  static LaurentPoly monomial(const Scalar& coef, Exponent exp) {
    LaurentPoly p;
    p.add_term(exp, coef);
    return p;
  }
  static LaurentPoly t(Exponent exp = 1) { return monomial(Scalar(1), exp); }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  Exponent valuation() const { return terms_.empty() ? kInfiniteValuation : terms_.begin()->first; }
  Exponent degree() const { return terms_.empty() ? kNegativeInfiniteDegree : terms_.rbegin()->first; }

  /// Coefficient of the lowest-order term. Undefined for zero.
  const Scalar& lowest_coefficient() const { return terms_.begin()->second; }

  Scalar coefficient(Exponent exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(Exponent exp, const Scalar& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiplication by t^k.
  LaurentPoly shifted(Exponent k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
  }

  /// Drops every term of exponent >= bound.
  void truncate_at(Exponent bound) { terms_.erase(terms_.lower_bound(bound), terms_.end()); }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }
  LaurentPoly& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [e, c] : a.terms_)
      for (const auto& [f, d] : b.terms_) out.add_term(e + f, c * d);
    return out;
  }
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& s) { return a *= s; }
  friend LaurentPoly operator*(const Scalar& s, LaurentPoly a) { return a *= s; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      if (e != 0) os << "*t^" << e;
    }
    return os;
  }

 private:
  TermMap terms_;
};

/// Exact quotient a / b in the Laurent ring; throws DomainError when b does not divide a.
template <typename Scalar>
LaurentPoly<Scalar> exact_divide(LaurentPoly<Scalar> a, const LaurentPoly<Scalar>& b) {
  if (b.is_zero()) throw DomainError("division by the zero Laurent polynomial");
  LaurentPoly<Scalar> quotient;
  if (a.is_zero()) return quotient;
  const auto lead_exp = b.valuation();
  const Scalar& lead_coef = b.lowest_coefficient();
  const auto max_quotient_degree = a.degree() - b.degree();
  while (!a.is_zero()) {
    const auto exp = a.valuation() - lead_exp;
    if (exp > max_quotient_degree) throw DomainError("Laurent division is not exact");
    auto term = LaurentPoly<Scalar>::monomial(a.lowest_coefficient() / lead_coef, exp);
    a -= term * b;
    quotient += term;
  }
  return quotient;
}

}  // namespace affcells

namespace Eigen {
template <typename Scalar>
struct NumTraits<affcells::LaurentPoly<Scalar>> : GenericNumTraits<affcells::LaurentPoly<Scalar>> {
  using Real = affcells::LaurentPoly<Scalar>;
  using NonInteger = affcells::LaurentPoly<Scalar>;
  using Nested = affcells::LaurentPoly<Scalar>;
  using Literal = affcells::LaurentPoly<Scalar>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  // Exact type; only consulted when a matrix is streamed.
  static constexpr int digits10() { return 0; }
};
}  // namespace Eigen
