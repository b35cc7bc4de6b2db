#pragma once

#include <Eigen/Core>

#include "bgpm/errors.hpp"
#include "bgpm/scalar.hpp"

namespace bgpm {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using MatrixZ = Matrix<BigInt>;
using MatrixQ = Matrix<Rational>;
using MatrixC = Matrix<ComplexF>;

template <class Scalar>
Matrix<Scalar> identity(Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

template <class Scalar>
Matrix<Scalar> zeros(Index rows, Index cols) {
  return Matrix<Scalar>::Zero(rows, cols);
}

template <class Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(what) + ": expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

// Repeated squaring. power(m, 0) is the identity.
template <class Scalar>
Matrix<Scalar> power(const Matrix<Scalar>& m, unsigned long exponent) {
  require_square(m, "power");
  Matrix<Scalar> result = identity<Scalar>(m.rows());
  Matrix<Scalar> base = m;
  while (exponent > 0) {
    if (exponent & 1UL) result = (result * base).eval();
    exponent >>= 1;
    if (exponent > 0) base = (base * base).eval();
  }
  return result;
}

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = scalar_cast<To>(m(i, j));
    }
  return out;
}

}  // namespace bgpm
