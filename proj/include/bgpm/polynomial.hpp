#pragma once

#include <utility>
#include <vector>

#include "bgpm/errors.hpp"
#include "bgpm/scalar.hpp"

namespace bgpm {

/// Dense univariate polynomial, coefficients lowest degree first.
/// Trailing zeros are trimmed on construction, so the leading coefficient is
/// nonzero unless the polynomial is identically zero (degree -1).
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }
  static Polynomial monomial(Scalar c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  // x - root
  static Polynomial linear_factor(const Scalar& root) { return Polynomial({Scalar(-root), Scalar(1)}); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const {
    if (coeffs_.empty()) throw DegenerateInput("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  template <class At>
  At operator()(const At& x) const {
    At acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + scalar_cast<At>(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// p(x^d)
  Polynomial substitute_power(std::size_t d) const {
    if (d == 0) throw PreconditionError("substitute_power: exponent must be positive");
    if (coeffs_.empty()) return {};
    std::vector<Scalar> out((coeffs_.size() - 1) * d + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * d] = coeffs_[i];
    return Polynomial(std::move(out));
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(Scalar(1));
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    std::vector<Scalar> out(p.coeffs_);
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
  }
  static bool is_zero_scalar(const Scalar& s) { return s == Scalar(0); }

  std::vector<Scalar> coeffs_;
};

using PolynomialQ = Polynomial<Rational>;
using PolynomialC = Polynomial<ComplexF>;

/// Euclidean division over a field. Throws DegenerateInput on a zero divisor.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& num,
                                                         const Polynomial<Scalar>& den) {
  if (den.is_zero()) throw DegenerateInput("polynomial division by zero");
  std::vector<Scalar> rem = num.coeffs();
  const auto dd = static_cast<std::size_t>(den.degree());
  if (rem.size() <= dd) return {Polynomial<Scalar>{}, num};
  std::vector<Scalar> quot(rem.size() - dd, Scalar(0));
  const Scalar& lead = den.leading();
  for (std::size_t i = rem.size(); i-- > dd;) {
    Scalar q = rem[i] / lead;
    quot[i - dd] = q;
    if (q == Scalar(0)) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeffs()[j];
  }
  rem.resize(dd);
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <class Scalar>
Polynomial<Scalar> make_monic(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  return (Scalar(1) / p.leading()) * p;
}

/// Monic gcd (exact for Rational).
template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

struct SquareFreeFactor {
  PolynomialQ factor;  // monic, square-free, degree >= 1
  unsigned multiplicity;
};

/// Yun's algorithm: p = lc * prod factor_i^{multiplicity_i}.
std::vector<SquareFreeFactor> square_free_decomposition(const PolynomialQ& p);

PolynomialC to_complex(const PolynomialQ& p);

}  // namespace bgpm
