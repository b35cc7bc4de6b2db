#pragma once

#include <variant>
#include <vector>

#include <Eigen/Core>

#include "bgpm/dense.hpp"

namespace bgpm::iep {

enum class CertificateMode { Exact, Tolerance };

// Row/column sum and sign tolerance used for floating matrices.
inline constexpr double kCertificateTolerance = 1e-12;

struct Certificate {
  bool nonnegative = false;
  bool doubly_stochastic = false;
  CertificateMode mode = CertificateMode::Exact;
};

/// Exact check: entries >= 0; DS additionally needs every row and column sum
/// equal to 1.
Certificate certify(const MatrixQ& m);
/// Same checks with kCertificateTolerance slack.
Certificate certify(const Eigen::MatrixXd& m);

/// A constructed matrix, the spectrum the construction promises, and a
/// certificate recomputed from the matrix itself.
struct RealizationResult {
  std::variant<MatrixQ, Eigen::MatrixXd> matrix;
  std::vector<ComplexF> claimed_spectrum;
  Certificate certificate;

  bool exact() const { return std::holds_alternative<MatrixQ>(matrix); }
  const MatrixQ& exact_matrix() const { return std::get<MatrixQ>(matrix); }
  Eigen::MatrixXd numeric_matrix() const;
  Index size() const;
};

/// T_n(a): n x n block cycle with identity blocks on the block superdiagonal
/// and `a` in the bottom-left corner. Its spectrum is every n-th root of
/// every eigenvalue of `a`; nonnegativity and double stochasticity of `a`
/// carry over. T_1(a) = a. Throws PreconditionError for n = 0.
RealizationResult root_lift(const MatrixQ& a, unsigned n);

/// Lifts an existing realization; its claimed spectrum is replaced by the
/// n-th roots of the old one.
RealizationResult root_lift(const RealizationResult& base, unsigned n);

/// Left fold of root_lift over `ns`.
RealizationResult root_lift_chain(const MatrixQ& a, const std::vector<unsigned>& ns);
RealizationResult root_lift_chain(const RealizationResult& base, const std::vector<unsigned>& ns);

/// Realization of `a` itself (claimed spectrum = eigenvalues of a).
RealizationResult realize(const MatrixQ& a);

/// Companion matrix of prod (x - lambda_i) for lambda_1 > 0 >= lambda_2 >= ... >= lambda_k
/// with nonnegative sum; every entry is then nonnegative.
/// Throws PreconditionError on bad ordering, InfeasibleError when the sum is negative.
RealizationResult suleimanova_realize(const std::vector<Rational>& lambdas);

/// T_n(J_k) with J_k the k x k matrix of 1/k: doubly stochastic, spectrum the
/// n-th roots of unity plus (k-1)n zeros.
RealizationResult ds_unity_cycle(unsigned k, unsigned n);

/// [[(1+l)/2, (1-l)/2], [(1-l)/2, (1+l)/2]], spectrum {1, l}. Needs -1 <= l <= 1.
RealizationResult ds_2x2(const Rational& lambda);

/// Symmetric 3x3 doubly stochastic matrix with spectrum {1, lambda, mu}.
RealizationResult ds_3x3_symmetric(const Rational& lambda, const Rational& mu);

/// Closed triangle spanned by the cube roots of unity.
bool pi3_contains(ComplexF z);

/// Circulant doubly stochastic matrix with spectrum {1, z, conj(z)}, built
/// from the polar form of z in floating point (tolerance certificate).
RealizationResult ds_3x3_complex(ComplexF z);

/// Exact variant for z = re + i * im_sqrt3 / sqrt(3); every vertex and edge
/// midpoint of the triangle has rational (re, im_sqrt3).
RealizationResult ds_3x3_complex(const Rational& re, const Rational& im_sqrt3);

/// Perron value that a cited existence result pairs with a self-conjugate
/// list (lambda_2, ..., lambda_k): (k-1)|w| when some entry is real, k|w| when
/// none is (k odd), where |w| is the largest |real entry|, |Re| or |Im|.
/// Only the bound is computed; no matrix is constructed.
struct PerronBound {
  double perron = 0.0;
  bool has_real_entry = false;
  std::vector<ComplexF> spectrum;  // (perron, lambda_2, ..., lambda_k)
};
PerronBound perron_bound(const std::vector<ComplexF>& rest);

}  // namespace bgpm::iep
