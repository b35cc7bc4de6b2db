#pragma once

#include <vector>

#include "bgpm/polynomial.hpp"

namespace bgpm {

struct Root {
  ComplexF value;
  unsigned multiplicity = 1;
};

struct RootOptions {
  // Backward-error target |p(z)| <= residual_tol * sum_i |a_i| |z|^i.
  double residual_tol = 1e-12;
  int max_iterations = 500;
  // Roots closer than this are reported once with summed multiplicity.
  double merge_tol = 1e-8;
};

/// All complex roots of an exact polynomial. Exact zero roots are deflated,
/// the remainder is split into square-free factors over Q, and each factor is
/// solved by Aberth-Ehrlich simultaneous iteration. Output is sorted by
/// (re, im).
/// Throws DegenerateInput for constant input, NonConvergence if the iteration
/// misses the residual target.
std::vector<Root> poly_roots(const PolynomialQ& p, const RootOptions& options = {});

/// Floating variant: exact-zero deflation, Aberth iteration on the rest,
/// then clustering.
std::vector<Root> poly_roots(const PolynomialC& p, const RootOptions& options = {});

/// The d d-th roots of z by increasing argument, principal root first.
/// Roots on the coordinate axes are produced without rounding noise in the
/// vanishing component.
std::vector<ComplexF> nth_roots(ComplexF z, unsigned d);

/// Repeats every root `multiplicity` times.
std::vector<ComplexF> expand(const std::vector<Root>& roots);

/// Groups values closer than `tol` (transitively) into one root each.
std::vector<Root> merge_clusters(const std::vector<Root>& roots, double tol);

}  // namespace bgpm
