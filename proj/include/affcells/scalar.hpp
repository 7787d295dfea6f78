#pragma once

// Exact scalar and dense matrix types shared by the whole library.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace affcells {

/// Arbitrary precision rational number. Expression templates are off so the
/// type behaves as a plain value inside Eigen kernels.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;

/// Raised when an input violates the mathematical precondition of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for a singular (or non-unimodular) matrix where an invertible one is required.
class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the text and JSON readers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(num) / Rational(den);
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace affcells
