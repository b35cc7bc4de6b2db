#pragma once

#include <optional>
#include <vector>

#include "bgpm/block_gpm.hpp"
#include "bgpm/polynomial.hpp"
#include "bgpm/roots.hpp"

namespace bgpm {

struct PolyFactor {
  PolynomialQ poly;
  unsigned exponent = 1;
};

/// Eigenvalue multiset of a matrix together with the exact polynomials it
/// came from, when the input was exact.
struct SpectrumResult {
  std::vector<Root> eigenvalues;
  /// det(xI - U), monic, degree = sum of multiplicities.
  std::optional<PolynomialQ> charpoly;
  /// det(xI - U^d) factored as prod_t det(xI - cycle_product_t)^d.
  std::optional<std::vector<PolyFactor>> exact_factors;

  std::size_t size() const {
    std::size_t total = 0;
    for (const auto& e : eigenvalues) total += e.multiplicity;
    return total;
  }
};

/// One monic factor det(xI - C_t) per orbit t = 1..g of the shift, each with
/// exponent d. The product of the factors raised to their exponents is the
/// characteristic polynomial of U^d (degree nk). For s = 0 this degenerates
/// to the per-block characteristic polynomials with exponent 1.
std::vector<PolyFactor> charpoly_of_dth_power(const BlockGpmQ& u);

/// Expands prod factor^exponent.
PolynomialQ expand_factors(const std::vector<PolyFactor>& factors);

/// Eigenvalues of U: for each orbit t and each eigenvalue lambda of the
/// cycle product C_t, all d d-th roots of lambda. Order: t ascending, then
/// the roots of det(xI - C_t), then ascending argument.
SpectrumResult bgpm_spectrum(const BlockGpmQ& u, const RootOptions& options = {});
SpectrumResult bgpm_spectrum(const BlockGpmZ& u, const RootOptions& options = {});
/// Floating input: no exact polynomials in the result.
SpectrumResult bgpm_spectrum(const BlockGpmC& u, const RootOptions& options = {});

/// C = sum_r coeffs[r] U^r, an element of the algebra generated by U.
template <class Scalar>
struct CirculantSpec {
  BlockGpm<Scalar> base;
  std::vector<ComplexF> coeffs;
};

/// Spectral mapping: every eigenvalue mu of the base contributes
/// sum_r c_r mu^r with the same multiplicity.
template <class Scalar>
SpectrumResult circulant_spectrum(const CirculantSpec<Scalar>& c, const RootOptions& options = {});

/// Dense matrix sum_r coeffs[r] dense(U)^r, for cross-checks.
template <class Scalar>
Matrix<Scalar> circulant_to_dense(const BlockGpm<Scalar>& base, const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) throw PreconditionError("circulant: coefficient list is empty");
  const Matrix<Scalar> u = to_dense(base);
  Matrix<Scalar> acc = Matrix<Scalar>::Identity(u.rows(), u.cols()) * coeffs.back();
  for (std::size_t r = coeffs.size() - 1; r-- > 0;)
    acc = (acc * u + Matrix<Scalar>::Identity(u.rows(), u.cols()) * coeffs[r]).eval();
  return acc;
}

}  // namespace bgpm
