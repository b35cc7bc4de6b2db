#include "bgpm/iep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "bgpm/block_gpm.hpp"
#include "bgpm/charpoly.hpp"
#include "bgpm/multiset.hpp"
#include "bgpm/roots.hpp"

namespace bgpm::iep {

namespace {

template <class Scalar>
Matrix<Scalar> lift_matrix(const Matrix<Scalar>& a, unsigned n) {
  require_square(a, "root_lift");
  if (n == 0) throw PreconditionError("root_lift: n must be positive");
  if (n == 1) return a;
  const Index k = a.rows();
  std::vector<Matrix<Scalar>> blocks(n - 1, identity<Scalar>(k));
  blocks.push_back(a);
  return to_dense(BlockGpm<Scalar>(ShiftPermutation(n, 1), std::move(blocks)));
}

std::vector<ComplexF> lift_spectrum(const std::vector<ComplexF>& spectrum, unsigned n) {
  std::vector<ComplexF> out;
  out.reserve(spectrum.size() * n);
  for (const auto& lambda : spectrum)
    for (const auto& mu : nth_roots(lambda, n)) out.push_back(mu);
  return out;
}

RealizationResult make_exact(MatrixQ m, std::vector<ComplexF> spectrum) {
  RealizationResult r;
  r.certificate = certify(m);
  r.matrix = std::move(m);
  r.claimed_spectrum = std::move(spectrum);
  return r;
}

RealizationResult make_numeric(Eigen::MatrixXd m, std::vector<ComplexF> spectrum) {
  RealizationResult r;
  r.certificate = certify(m);
  r.matrix = std::move(m);
  r.claimed_spectrum = std::move(spectrum);
  return r;
}

[[noreturn]] void infeasible(const std::string& condition) {
  throw InfeasibleError(condition, condition + " violated");
}

}  // namespace

Certificate certify(const MatrixQ& m) {
  Certificate c;
  c.mode = CertificateMode::Exact;
  c.nonnegative = (m.array() >= Rational(0)).all();
  if (c.nonnegative && m.rows() == m.cols()) {
    bool ds = true;
    for (Index i = 0; i < m.rows() && ds; ++i) ds = m.row(i).sum() == 1 && m.col(i).sum() == 1;
    c.doubly_stochastic = ds;
  }
  return c;
}

Certificate certify(const Eigen::MatrixXd& m) {
  Certificate c;
  c.mode = CertificateMode::Tolerance;
  c.nonnegative = (m.array() >= -kCertificateTolerance).all();
  if (c.nonnegative && m.rows() == m.cols()) {
    const bool rows = ((m.rowwise().sum().array() - 1.0).abs() <= kCertificateTolerance).all();
    const bool cols = ((m.colwise().sum().array() - 1.0).abs() <= kCertificateTolerance).all();
    c.doubly_stochastic = rows && cols;
  }
  return c;
}

Eigen::MatrixXd RealizationResult::numeric_matrix() const {
  if (exact()) return convert<double>(exact_matrix());
  return std::get<Eigen::MatrixXd>(matrix);
}

Index RealizationResult::size() const {
  return std::visit([](const auto& m) { return m.rows(); }, matrix);
}

RealizationResult realize(const MatrixQ& a) {
  require_square(a, "realize");
  return make_exact(a, expand(poly_roots(char_poly_exact(a))));
}

RealizationResult root_lift(const RealizationResult& base, unsigned n) {
  auto spectrum = lift_spectrum(base.claimed_spectrum, n);
  if (base.exact()) return make_exact(lift_matrix(base.exact_matrix(), n), std::move(spectrum));
  return make_numeric(lift_matrix(std::get<Eigen::MatrixXd>(base.matrix), n), std::move(spectrum));
}

RealizationResult root_lift(const MatrixQ& a, unsigned n) {
  if (n == 0) throw PreconditionError("root_lift: n must be positive");
  return root_lift(realize(a), n);
}

RealizationResult root_lift_chain(const RealizationResult& base, const std::vector<unsigned>& ns) {
  if (ns.empty()) throw PreconditionError("root_lift_chain: empty list of cycle lengths");
  RealizationResult acc = base;
  for (unsigned n : ns) acc = root_lift(acc, n);
  return acc;
}

RealizationResult root_lift_chain(const MatrixQ& a, const std::vector<unsigned>& ns) {
  if (ns.empty()) throw PreconditionError("root_lift_chain: empty list of cycle lengths");
  return root_lift_chain(realize(a), ns);
}

RealizationResult suleimanova_realize(const std::vector<Rational>& lambdas) {
  if (lambdas.empty()) throw PreconditionError("suleimanova_realize: empty list");
  if (!(lambdas.front() > 0)) throw PreconditionError("suleimanova_realize: need lambda_1 > 0");
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    if (lambdas[i] > 0) throw PreconditionError("suleimanova_realize: need lambda_i <= 0 for i >= 2");
    if (i >= 2 && lambdas[i] > lambdas[i - 1])
      throw PreconditionError("suleimanova_realize: need lambda_2 >= ... >= lambda_k");
  }
  Rational sum = 0;
  for (const auto& l : lambdas) sum += l;
  if (sum < 0) infeasible("Σλᵢ ≥ 0");

  PolynomialQ p = PolynomialQ::constant(Rational(1));
  for (const auto& l : lambdas) p = p * PolynomialQ::linear_factor(l);
  const auto k = static_cast<Index>(lambdas.size());
  MatrixQ m = zeros<Rational>(k, k);
  for (Index i = 0; i + 1 < k; ++i) m(i, i + 1) = 1;
  for (Index j = 0; j < k; ++j) m(k - 1, j) = -p.coeff(static_cast<std::size_t>(j));

  std::vector<ComplexF> spectrum;
  for (const auto& l : lambdas) spectrum.push_back(to_complex(l));
  return make_exact(std::move(m), std::move(spectrum));
}

RealizationResult ds_unity_cycle(unsigned k, unsigned n) {
  if (k == 0 || n == 0) throw PreconditionError("ds_unity_cycle: k and n must be positive");
  const MatrixQ j = MatrixQ::Constant(k, k, Rational(1, k));
  std::vector<ComplexF> spectrum{ComplexF(1.0, 0.0)};
  spectrum.resize(k, ComplexF{});
  return make_exact(lift_matrix(j, n), lift_spectrum(spectrum, n));
}

RealizationResult ds_2x2(const Rational& lambda) {
  if (lambda < -1 || lambda > 1) infeasible("-1 ≤ λ ≤ 1");
  const Rational on = (1 + lambda) / 2;
  const Rational off = (1 - lambda) / 2;
  MatrixQ m(2, 2);
  m << on, off, off, on;
  return make_exact(std::move(m), {ComplexF(1.0, 0.0), to_complex(lambda)});
}

RealizationResult ds_3x3_symmetric(const Rational& lambda, const Rational& mu) {
  if (lambda < -1 || lambda > 1) infeasible("-1 ≤ λ ≤ 1");
  if (mu < -1 || mu > 1) infeasible("-1 ≤ μ ≤ 1");
  if (lambda + 3 * mu + 2 < 0) infeasible("λ + 3μ + 2 ≥ 0");
  if (3 * lambda + mu + 2 < 0) infeasible("3λ + μ + 2 ≥ 0");

  const Rational& hi = lambda >= mu ? lambda : mu;
  const Rational& lo = lambda >= mu ? mu : lambda;
  const Rational corner = 2 + 4 * hi;
  const Rational edge = 2 - 2 * hi;
  const Rational diag = 2 + hi + 3 * lo;
  const Rational anti = 2 + hi - 3 * lo;
  MatrixQ m(3, 3);
  m << corner, edge, edge,
       edge, diag, anti,
       edge, anti, diag;
  m /= Rational(6);
  return make_exact(std::move(m), {ComplexF(1.0, 0.0), to_complex(lambda), to_complex(mu)});
}

bool pi3_contains(ComplexF z) {
  // Barycentric weights of 1, e^{2 pi i/3}, e^{-2 pi i/3}.
  const double x = z.real();
  const double y = z.imag();
  const double b0 = (1.0 + 2.0 * x) / 3.0;
  const double b1 = (1.0 - x) / 3.0 + y / std::numbers::sqrt3;
  const double b2 = (1.0 - x) / 3.0 - y / std::numbers::sqrt3;
  constexpr double kSlack = -1e-12;
  return b0 >= kSlack && b1 >= kSlack && b2 >= kSlack;
}

RealizationResult ds_3x3_complex(ComplexF z) {
  if (!pi3_contains(z)) infeasible("z ∈ Π₃");
  const double r = std::abs(z);
  const double theta = std::arg(z);
  constexpr double third = std::numbers::pi / 3.0;
  const double e0 = (1.0 + 2.0 * r * std::cos(theta)) / 3.0;
  const double e1 = (1.0 - 2.0 * r * std::cos(third + theta)) / 3.0;
  const double e2 = (1.0 - 2.0 * r * std::cos(third - theta)) / 3.0;
  Eigen::MatrixXd m(3, 3);
  m << e0, e1, e2,
       e2, e0, e1,
       e1, e2, e0;
  return make_numeric(std::move(m), {ComplexF(1.0, 0.0), z, std::conj(z)});
}

RealizationResult ds_3x3_complex(const Rational& re, const Rational& im_sqrt3) {
  // With z = x + i w / sqrt(3): 2r cos(theta) = 2x and
  // 2r cos(pi/3 -+ theta) = x +- w, so every entry is rational.
  const Rational e0 = (1 + 2 * re) / 3;
  const Rational e1 = (1 - re + im_sqrt3) / 3;
  const Rational e2 = (1 - re - im_sqrt3) / 3;
  if (e0 < 0 || e1 < 0 || e2 < 0) infeasible("z ∈ Π₃");
  MatrixQ m(3, 3);
  m << e0, e1, e2,
       e2, e0, e1,
       e1, e2, e0;
  const ComplexF z(to_double(re), to_double(im_sqrt3) / std::numbers::sqrt3);
  return make_exact(std::move(m), {ComplexF(1.0, 0.0), z, std::conj(z)});
}

PerronBound perron_bound(const std::vector<ComplexF>& rest) {
  constexpr double kTol = 1e-12;
  std::vector<ComplexF> conj(rest.size());
  std::transform(rest.begin(), rest.end(), conj.begin(), [](ComplexF z) { return std::conj(z); });
  if (!multiset_match(std::span<const ComplexF>(rest), std::span<const ComplexF>(conj), kTol).matched)
    throw PreconditionError("perron_bound: list is not closed under complex conjugation");

  PerronBound out;
  double w = 0.0;
  for (const auto& z : rest) {
    if (std::abs(z.imag()) <= kTol) {
      out.has_real_entry = true;
      w = std::max(w, std::abs(z.real()));
    } else {
      w = std::max({w, std::abs(z.real()), std::abs(z.imag())});
    }
  }
  const double k = static_cast<double>(rest.size() + 1);
  out.perron = (out.has_real_entry ? k - 1.0 : k) * w;
  out.spectrum.push_back(ComplexF(out.perron, 0.0));
  out.spectrum.insert(out.spectrum.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace bgpm::iep
