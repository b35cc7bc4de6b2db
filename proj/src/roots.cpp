#include "bgpm/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

namespace bgpm {

namespace {

using Real = long double;
using Complex = std::complex<Real>;

constexpr Real kTwoPi = 2 * std::numbers::pi_v<Real>;

Real to_real(const Rational& q) {
  const Real num = boost::multiprecision::numerator(q).convert_to<Real>();
  const Real den = boost::multiprecision::denominator(q).convert_to<Real>();
  if (std::isfinite(num) && std::isfinite(den)) return num / den;
  return static_cast<Real>(to_double(q));
}

struct Evaluation {
  Complex value;
  Complex slope;
  Real scale;  // sum_i |a_i| |z|^i
};

Evaluation evaluate(const std::vector<Complex>& a, Complex z) {
  Complex p = a.back();
  Complex dp = 0;
  Real scale = std::abs(a.back());
  const Real r = std::abs(z);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
    scale = scale * r + std::abs(a[i]);
  }
  return {p, dp, scale};
}

// Starting points on circles whose radii come from the upper convex hull of
// (i, log|a_i|), so root magnitudes of every scale get a seed.
std::vector<Complex> initial_guesses(const std::vector<Complex>& a) {
  const std::size_t n = a.size() - 1;
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i <= n; ++i) {
    if (std::abs(a[i]) == 0) continue;
    const Real yi = std::log(std::abs(a[i]));
    while (hull.size() >= 2) {
      const std::size_t i1 = hull[hull.size() - 2];
      const std::size_t i2 = hull.back();
      const Real y1 = std::log(std::abs(a[i1]));
      const Real y2 = std::log(std::abs(a[i2]));
      // Drop i2 when it lies on or below the chord i1 -> i.
      if ((y2 - y1) * static_cast<Real>(i - i1) <= (yi - y1) * static_cast<Real>(i2 - i1))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }
  std::vector<Complex> z;
  z.reserve(n);
  constexpr Real kOffset = 0.7L;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const std::size_t lo = hull[e];
    const std::size_t hi = hull[e + 1];
    const std::size_t count = hi - lo;
    const Real radius = std::pow(std::abs(a[lo]) / std::abs(a[hi]), Real(1) / static_cast<Real>(count));
    for (std::size_t j = 0; j < count; ++j) {
      const Real angle = kTwoPi * static_cast<Real>(j) / static_cast<Real>(count) +
                         kTwoPi * static_cast<Real>(lo) / static_cast<Real>(n) + kOffset;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

// Aberth-Ehrlich iteration for a polynomial with nonzero constant term.
std::vector<Complex> aberth(const std::vector<Complex>& a, const RootOptions& options) {
  const std::size_t n = a.size() - 1;
  if (n == 1) return {-a[0] / a[1]};

  std::vector<Complex> z = initial_guesses(a);
  std::vector<bool> done(n, false);
  constexpr Real kTight = 64 * LDBL_EPSILON;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto ev = evaluate(a, z[i]);
      if (std::abs(ev.value) <= kTight * ev.scale) {
        done[i] = true;
        continue;
      }
      all_done = false;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += Real(1) / (z[i] - z[j]);
      Complex step;
      if (std::abs(ev.slope) == 0) {
        step = std::polar(std::max(Real(1e-8), std::abs(z[i]) * Real(1e-8)), static_cast<Real>(i));
      } else {
        const Complex ratio = ev.value / ev.slope;
        step = ratio / (Real(1) - ratio * sum);
      }
      z[i] -= step;
      if (std::abs(step) <= LDBL_EPSILON * std::abs(z[i])) done[i] = true;
    }
    if (all_done) break;
  }

  std::vector<ComplexF> best;
  bool ok = true;
  for (const auto& zi : z) {
    best.emplace_back(static_cast<double>(zi.real()), static_cast<double>(zi.imag()));
    const auto ev = evaluate(a, zi);
    if (!(std::abs(ev.value) <= static_cast<Real>(options.residual_tol) * ev.scale)) ok = false;
  }
  if (!ok)
    throw NonConvergence(best, "poly_roots: residual target not reached after " +
                                   std::to_string(options.max_iterations) + " iterations");
  return z;
}

// For real polynomials, roots lying numerically on the real axis are moved
// onto it and refined by real Newton steps.
void snap_real(const std::vector<Complex>& a, std::vector<Complex>& z) {
  for (auto& zi : z) {
    if (std::abs(zi.imag()) > Real(1e-10) * std::max(Real(1), std::abs(zi))) continue;
    Complex x(zi.real(), 0);
    for (int step = 0; step < 3; ++step) {
      const auto ev = evaluate(a, x);
      if (std::abs(ev.slope) == 0) break;
      const Complex next(x.real() - (ev.value / ev.slope).real(), 0);
      if (std::abs(evaluate(a, next).value) >= std::abs(ev.value)) break;
      x = next;
    }
    const auto ev = evaluate(a, x);
    if (std::abs(ev.value) <= Real(1e-13) * ev.scale) zi = x;
  }
}

ComplexF to_output(Complex z) {
  double re = static_cast<double>(z.real());
  double im = static_cast<double>(z.imag());
  if (re == 0.0) re = 0.0;  // folds -0
  if (im == 0.0) im = 0.0;
  return {re, im};
}

bool lex_less(const Root& x, const Root& y) {
  if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
  if (x.value.imag() != y.value.imag()) return x.value.imag() < y.value.imag();
  return x.multiplicity < y.multiplicity;
}

// Splits off the x^m factor; returns m and the remaining coefficients.
template <class Scalar>
std::size_t leading_zero_count(const std::vector<Scalar>& coeffs) {
  std::size_t m = 0;
  while (m < coeffs.size() && coeffs[m] == Scalar(0)) ++m;
  return m;
}

}  // namespace

std::vector<Root> merge_clusters(const std::vector<Root>& roots, double tol) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i].value - roots[j].value) <= tol) parent[find(i)] = find(j);

  std::vector<Root> out;
  std::vector<std::size_t> slot(n, n);
  std::vector<ComplexF> sums;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({ComplexF{}, 0});
      sums.emplace_back();
    }
    auto& root = out[slot[r]];
    sums[slot[r]] += roots[i].value * static_cast<double>(roots[i].multiplicity);
    root.multiplicity += roots[i].multiplicity;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].value = sums[i] / static_cast<double>(out[i].multiplicity);
  }
  // A singleton keeps its exact value.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (out[slot[r]].multiplicity == roots[i].multiplicity) out[slot[r]].value = roots[i].value;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Root> poly_roots(const PolynomialQ& p, const RootOptions& options) {
  if (p.is_zero()) throw DegenerateInput("poly_roots: zero polynomial");
  if (p.degree() < 1) throw DegenerateInput("poly_roots: constant polynomial has no roots");

  std::vector<Root> roots;
  const std::size_t zeros = leading_zero_count(p.coeffs());
  if (zeros > 0) roots.push_back({ComplexF{}, static_cast<unsigned>(zeros)});
  const PolynomialQ rest(std::vector<Rational>(p.coeffs().begin() + static_cast<long>(zeros), p.coeffs().end()));

  for (const auto& [factor, multiplicity] : square_free_decomposition(rest)) {
    std::vector<Complex> a;
    a.reserve(factor.coeffs().size());
    for (const auto& c : factor.coeffs()) a.emplace_back(to_real(c), Real(0));
    auto z = aberth(a, options);
    snap_real(a, z);
    for (const auto& zi : z) roots.push_back({to_output(zi), multiplicity});
  }
  return merge_clusters(roots, options.merge_tol);
}

std::vector<Root> poly_roots(const PolynomialC& p, const RootOptions& options) {
  if (p.is_zero()) throw DegenerateInput("poly_roots: zero polynomial");
  if (p.degree() < 1) throw DegenerateInput("poly_roots: constant polynomial has no roots");

  std::vector<Root> roots;
  const std::size_t zeros = leading_zero_count(p.coeffs());
  if (zeros > 0) roots.push_back({ComplexF{}, static_cast<unsigned>(zeros)});
  if (static_cast<long>(zeros) < p.degree()) {
    std::vector<Complex> a;
    for (std::size_t i = zeros; i < p.coeffs().size(); ++i) a.push_back(scalar_cast<Complex>(p.coeffs()[i]));
    for (const auto& zi : aberth(a, options)) roots.push_back({to_output(zi), 1});
  }
  return merge_clusters(roots, options.merge_tol);
}

std::vector<ComplexF> nth_roots(ComplexF z, unsigned d) {
  if (d == 0) throw PreconditionError("nth_roots: d must be positive");
  if (z == ComplexF{}) return std::vector<ComplexF>(d, ComplexF{});
  const double r = d == 2 ? std::sqrt(std::abs(z)) : std::pow(std::abs(z), 1.0 / d);

  // On an axis the argument is c * pi/2 exactly, c in {-1, 0, 1, 2}.
  std::optional<int> quarter;
  if (z.imag() == 0.0) quarter = z.real() > 0 ? 0 : 2;
  if (z.real() == 0.0) quarter = z.imag() > 0 ? 1 : -1;

  std::vector<ComplexF> out;
  out.reserve(d);
  for (unsigned j = 0; j < d; ++j) {
    if (quarter) {
      const long num = *quarter + 4L * j;  // angle = num * pi / (2d)
      if (num % static_cast<long>(d) == 0) {
        switch (((num / static_cast<long>(d)) % 4 + 4) % 4) {
          case 0: out.emplace_back(r, 0.0); break;
          case 1: out.emplace_back(0.0, r); break;
          case 2: out.emplace_back(-r, 0.0); break;
          default: out.emplace_back(0.0, -r); break;
        }
        continue;
      }
      out.push_back(std::polar(r, std::numbers::pi * static_cast<double>(num) / (2.0 * d)));
      continue;
    }
    out.push_back(std::polar(r, (std::arg(z) + 2.0 * std::numbers::pi * j) / d));
  }
  return out;
}

std::vector<ComplexF> expand(const std::vector<Root>& roots) {
  std::vector<ComplexF> out;
  for (const auto& root : roots) out.insert(out.end(), root.multiplicity, root.value);
  return out;
}

}  // namespace bgpm
