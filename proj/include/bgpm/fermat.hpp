#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bgpm/dense.hpp"

namespace bgpm::fermat {

/// Integer matrices with a X^p + b Y^q = c Z^r.
struct FermatFamily {
  BigInt a, b, c;
  unsigned p = 1, q = 1, r = 1;
  Index n = 0;
  MatrixZ X, Y, Z;
  // Free parameters of the generator that produced the family, as text.
  std::vector<std::pair<std::string, std::string>> params;
};

struct VerifyResult {
  bool ok = false;
  MatrixZ residual;  // a X^p + b Y^q - c Z^r
};

/// Exact big-integer check. Throws DimensionError unless X, Y, Z are square
/// and of equal size.
VerifyResult verify_identity(const BigInt& a, const BigInt& b, const BigInt& c, unsigned p, unsigned q, unsigned r,
                             const MatrixZ& X, const MatrixZ& Y, const MatrixZ& Z);
VerifyResult verify_identity(const FermatFamily& family);

/// m^e by repeated squaring; products skip zero entries, which keeps
/// monomial matrices cheap.
MatrixZ integer_power(const MatrixZ& m, unsigned e);

/// n x n monomial matrices on the shift i -> i + 1 with cycle products
/// c, c and a + b, so X^n = Y^n = c I and Z^n = (a + b) I.
///
/// Each params list holds the n - 1 entries of block rows 2..n; the row 1
/// entry is the cycle product divided by their product (an empty list means
/// all ones). Throws UnsupportedSign unless c > 0 and a + b > 0,
/// PreconditionError for n < 2 or params that do not divide the product.
FermatFamily solve_uniform(const BigInt& a, const BigInt& b, const BigInt& c, Index n,
                           const std::vector<BigInt>& x_params = {}, const std::vector<BigInt>& y_params = {},
                           const std::vector<BigInt>& z_params = {});

/// a X'^p + b Y'^q = c Z'^r from the uniform family of size k = lcm(p, q, r):
/// X' = X^(k/p), Y' = Y^(k/q), Z' = Z^(k/r).
FermatFamily solve_mixed(const BigInt& a, const BigInt& b, const BigInt& c, unsigned p, unsigned q, unsigned r);

/// Pairwise commuting 5x5 family with 4A^5 = B^5 + 3C^5, returned with
/// (a, b, c) = (4, -1, 3) and exponents 5. Computed as A = m R^3, B = m R,
/// C = m R^4, m = tuvw, from the shift-2 matrix R with entries
/// (u, v, w, 1/m, t), and checked against `example24_table`.
FermatFamily example24_family(const BigInt& t, const BigInt& u, const BigInt& v, const BigInt& w);

struct Example24Matrices {
  MatrixZ A, B, C;
};
/// The closed-form monomial entries of A, B, C.
Example24Matrices example24_table(const BigInt& t, const BigInt& u, const BigInt& v, const BigInt& w);

/// coeff * prod_i G_i^{exponents[i]}
struct PolyTerm {
  BigInt coeff;
  std::vector<unsigned> exponents;
};

struct DensifyResult {
  MatrixZ D;
  std::vector<MatrixZ> products;  // D G_i
};

/// D = sum of terms in the commuting generators; returns D and every D G_i.
/// Throws NonCommuting if two generators do not commute, PreconditionError on
/// negative coefficients or entries, CoverageError when D or some D G_i has a
/// zero entry (naming the uncovered shift residues).
DensifyResult densify_positive(std::span<const MatrixZ> generators, const std::vector<PolyTerm>& terms);

/// Applies densify_positive to (X, Y, Z) of a family with equal exponents;
/// (DX, DY, DZ) satisfies the same identity since D commutes with all three.
FermatFamily densify_family(const FermatFamily& family, const std::vector<PolyTerm>& terms);

/// D = r I + a A + b B + c C + d C^3 over generators (A, B, C).
std::vector<PolyTerm> example24_densify_terms(const BigInt& r, const BigInt& a, const BigInt& b, const BigInt& c,
                                              const BigInt& d);

}  // namespace bgpm::fermat
