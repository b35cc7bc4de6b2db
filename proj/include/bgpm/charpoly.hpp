#pragma once

#include "bgpm/dense.hpp"
#include "bgpm/polynomial.hpp"

namespace bgpm {

/// det(xI - m), monic, computed exactly: similarity reduction to upper
/// Hessenberg form followed by the Hessenberg determinant recurrence.
/// Throws DimensionError for non-square input.
PolynomialQ char_poly_exact(const MatrixQ& m);

/// Floating counterpart of `char_poly_exact`. Pivots on the largest
/// subdiagonal entry; coefficients carry rounding error.
PolynomialC char_poly_float(const MatrixC& m);

}  // namespace bgpm
