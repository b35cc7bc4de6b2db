#include "bgpm/charpoly.hpp"

#include <cmath>

namespace bgpm {

namespace {

template <class Scalar>
bool better_pivot(const Scalar& candidate, const Scalar& current) {
  if constexpr (ScalarTraits<Scalar>::exact)
    return current == Scalar(0) && candidate != Scalar(0);
  else
    return std::abs(candidate) > std::abs(current);
}

// In-place similarity reduction to upper Hessenberg form.
template <class Scalar>
void reduce_to_hessenberg(Matrix<Scalar>& h) {
  const Index n = h.rows();
  for (Index m = 1; m + 1 < n; ++m) {
    Index pivot = m;
    for (Index i = m + 1; i < n; ++i)
      if (better_pivot(h(i, m - 1), h(pivot, m - 1))) pivot = i;
    if (h(pivot, m - 1) == Scalar(0)) continue;
    if (pivot != m) {
      h.row(pivot).swap(h.row(m));
      h.col(pivot).swap(h.col(m));
    }
    const Scalar inv = Scalar(1) / h(m, m - 1);
    for (Index i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == Scalar(0)) continue;
      const Scalar t = h(i, m - 1) * inv;
      // R_i -= t R_m, then C_m += t C_i keeps the transform a similarity.
      for (Index j = 0; j < n; ++j) h(i, j) -= t * h(m, j);
      for (Index j = 0; j < n; ++j) h(j, m) += t * h(j, i);
    }
  }
}

template <class Scalar>
Polynomial<Scalar> hessenberg_char_poly(Matrix<Scalar> h) {
  reduce_to_hessenberg(h);
  const Index n = h.rows();
  const Polynomial<Scalar> x = Polynomial<Scalar>::monomial(Scalar(1), 1);
  // p[m] is the characteristic polynomial of the leading m x m block.
  std::vector<Polynomial<Scalar>> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.push_back(Polynomial<Scalar>::constant(Scalar(1)));
  for (Index m = 1; m <= n; ++m) {
    Polynomial<Scalar> next = (x - Polynomial<Scalar>::constant(h(m - 1, m - 1))) * p[m - 1];
    Scalar t(1);
    for (Index i = m - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (t == Scalar(0)) break;
      next = next - (Scalar(h(i - 1, m - 1) * t)) * p[static_cast<std::size_t>(i - 1)];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

}  // namespace

PolynomialQ char_poly_exact(const MatrixQ& m) {
  require_square(m, "char_poly_exact");
  return hessenberg_char_poly<Rational>(m);
}

PolynomialC char_poly_float(const MatrixC& m) {
  require_square(m, "char_poly_float");
  return hessenberg_char_poly<ComplexF>(m);
}

}  // namespace bgpm
