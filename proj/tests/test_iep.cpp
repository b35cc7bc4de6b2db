#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bgpm/iep.hpp"
#include "bgpm/multiset.hpp"
#include "oracles.hpp"

using namespace bgpm;
using namespace bgpm::iep;

namespace {

MatrixQ from_ints(Index rows, Index cols, std::initializer_list<int> values) {
  MatrixQ m(rows, cols);
  auto it = values.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

MatrixQ half_ones(Index k) { return MatrixQ::Constant(k, k, Rational(1, k)); }

std::vector<ComplexF> oracle_spectrum(const RealizationResult& r) {
  if (r.exact()) return expand(oracle::dense_spectrum(r.exact_matrix()));
  return expand(oracle::dense_spectrum(convert<Rational>(r.numeric_matrix())));
}

bool spectrum_ok(const RealizationResult& r, double tol = 1e-8) {
  const auto dense = oracle_spectrum(r);
  return multiset_match(std::span<const ComplexF>(r.claimed_spectrum), std::span<const ComplexF>(dense), tol)
      .matched;
}

bool same_multiset(const std::vector<ComplexF>& a, const std::vector<ComplexF>& b, double tol = 1e-12) {
  return multiset_match(std::span<const ComplexF>(a), std::span<const ComplexF>(b), tol).matched;
}

bool exactly_ds(const RealizationResult& r) {
  return r.exact() && r.certificate.doubly_stochastic && r.certificate.mode == CertificateMode::Exact;
}

}  // namespace

TEST_CASE("certify") {
  const auto ds = certify(half_ones(2));
  CHECK(ds.nonnegative);
  CHECK(ds.doubly_stochastic);
  CHECK(ds.mode == CertificateMode::Exact);

  const auto neg = certify(from_ints(2, 2, {1, -1, 0, 2}));
  CHECK_FALSE(neg.nonnegative);
  CHECK_FALSE(neg.doubly_stochastic);

  const auto rowonly = certify(from_ints(2, 2, {1, 0, 1, 0}));
  CHECK(rowonly.nonnegative);
  CHECK_FALSE(rowonly.doubly_stochastic);

  Eigen::MatrixXd f(2, 2);
  f << 0.3, 0.7, 0.7, 0.3 + 1e-14;
  const auto tol = certify(f);
  CHECK(tol.doubly_stochastic);
  CHECK(tol.mode == CertificateMode::Tolerance);
  f(1, 1) += 1e-9;
  CHECK_FALSE(certify(f).doubly_stochastic);
}

TEST_CASE("root_lift examples") {
  const auto j2 = root_lift(half_ones(2), 2);
  CHECK(j2.size() == 4);
  CHECK(exactly_ds(j2));
  CHECK(same_multiset(j2.claimed_spectrum, {1.0, -1.0, 0.0, 0.0}));
  CHECK(spectrum_ok(j2));

  const auto cyc = root_lift(from_ints(1, 1, {1}), 3);
  CHECK(cyc.exact_matrix() == from_ints(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
  CHECK(same_multiset(cyc.claimed_spectrum, nth_roots(1.0, 3)));

  const auto a = from_ints(2, 2, {0, 1, 2, 3});
  const auto lifted = root_lift(a, 2);
  CHECK(lifted.certificate.nonnegative);
  CHECK_FALSE(lifted.certificate.doubly_stochastic);
  std::vector<ComplexF> expected;
  const double s = std::sqrt(17.0);
  for (double lambda : {(3 + s) / 2, (3 - s) / 2})
    for (const auto& mu : nth_roots(lambda, 2)) expected.push_back(mu);
  CHECK(same_multiset(lifted.claimed_spectrum, expected, 1e-10));
  CHECK(spectrum_ok(lifted));

  CHECK_THROWS_AS(root_lift(a, 0), PreconditionError);
  CHECK_THROWS_AS(root_lift(MatrixQ(2, 3), 2), DimensionError);
}

TEST_CASE("root_lift block layout") {
  const auto a = from_ints(2, 2, {1, 2, 3, 4});
  const MatrixQ t = root_lift(a, 3).exact_matrix();
  MatrixQ expected = zeros<Rational>(6, 6);
  expected.block(0, 2, 2, 2) = identity<Rational>(2);
  expected.block(2, 4, 2, 2) = identity<Rational>(2);
  expected.block(4, 0, 2, 2) = a;
  CHECK(t == expected);
  CHECK(root_lift(a, 1).exact_matrix() == a);
}

TEST_CASE("root_lift_chain examples") {
  const auto r = root_lift_chain(half_ones(2), {2, 2});
  CHECK(r.size() == 8);
  CHECK(exactly_ds(r));
  CHECK(same_multiset(r.claimed_spectrum, {1.0, ComplexF(0, 1), -1.0, ComplexF(0, -1), 0.0, 0.0, 0.0, 0.0}));
  CHECK(spectrum_ok(r));

  const auto a = from_ints(2, 2, {0, 1, 2, 3});
  CHECK(root_lift_chain(a, {1}).exact_matrix() == a);

  const auto six = root_lift_chain(from_ints(1, 1, {2}), {2, 3});
  CHECK(six.size() == 6);
  std::vector<ComplexF> expected;
  for (const auto& r2 : nth_roots(2.0, 2))
    for (const auto& r3 : nth_roots(r2, 3)) expected.push_back(r3);
  CHECK(same_multiset(six.claimed_spectrum, expected));
  CHECK(same_multiset(six.claimed_spectrum, nth_roots(2.0, 6), 1e-12));
  CHECK(spectrum_ok(six));

  CHECK_THROWS_AS(root_lift_chain(a, {}), PreconditionError);
}

TEST_CASE("root_lift preserves certificates") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Index k = oracle::uniform_int(rng, 1, 3);
    MatrixQ a = oracle::random_matrix(rng, k, k, 0, 5, 3);
    const unsigned n = static_cast<unsigned>(oracle::uniform_int(rng, 1, 4));
    const auto base = certify(a);
    const auto lifted = root_lift(a, n);
    CHECK(lifted.certificate.nonnegative == base.nonnegative);
    CHECK(lifted.certificate.doubly_stochastic == base.doubly_stochastic);
    CHECK(spectrum_ok(lifted));
  }
}

TEST_CASE("suleimanova_realize examples") {
  const auto r = suleimanova_realize({2, -1, -1});
  CHECK(r.exact_matrix() == from_ints(3, 3, {0, 1, 0, 0, 0, 1, 2, 3, 0}));
  CHECK(r.certificate.nonnegative);
  CHECK(spectrum_ok(r));

  CHECK(suleimanova_realize({1}).exact_matrix() == from_ints(1, 1, {1}));

  const auto r2 = suleimanova_realize({3, -1, -2});
  CHECK(r2.exact_matrix() == from_ints(3, 3, {0, 1, 0, 0, 0, 1, 6, 7, 0}));
  CHECK(spectrum_ok(r2));

  CHECK_THROWS_AS(suleimanova_realize({}), PreconditionError);
  CHECK_THROWS_AS(suleimanova_realize({-1, -1}), PreconditionError);
  CHECK_THROWS_AS(suleimanova_realize({2, 1}), PreconditionError);
  CHECK_THROWS_AS(suleimanova_realize({3, -2, -1}), PreconditionError);
  try {
    suleimanova_realize({1, -1, -1});
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.condition() == "Σλᵢ ≥ 0");
  }
}

TEST_CASE("suleimanova_realize on random lists") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = oracle::uniform_int(rng, 1, 5);
    std::vector<Rational> rest;
    for (int i = 1; i < k; ++i) rest.push_back(oracle::random_rational(rng, -5, 0, 3));
    std::sort(rest.begin(), rest.end(), std::greater<>());
    Rational sum = 0;
    for (const auto& v : rest) sum += v;
    std::vector<Rational> lams{-sum + oracle::random_rational(rng, 1, 4, 2)};
    lams.insert(lams.end(), rest.begin(), rest.end());
    const auto r = suleimanova_realize(lams);
    CHECK(r.certificate.nonnegative);
    CHECK(spectrum_ok(r));
  }
}

TEST_CASE("ds_unity_cycle examples") {
  const auto a = ds_unity_cycle(2, 2);
  CHECK(exactly_ds(a));
  CHECK(same_multiset(a.claimed_spectrum, {1.0, -1.0, 0.0, 0.0}));
  CHECK(spectrum_ok(a));

  const auto b = ds_unity_cycle(1, 3);
  CHECK(b.exact_matrix() == from_ints(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
  CHECK(same_multiset(b.claimed_spectrum, nth_roots(1.0, 3)));

  const auto c = ds_unity_cycle(2, 3);
  CHECK(exactly_ds(c));
  const ComplexF w = std::polar(1.0, 2 * std::numbers::pi / 3);
  CHECK(same_multiset(c.claimed_spectrum, {1.0, w, w * w, 0.0, 0.0, 0.0}, 1e-12));
  CHECK(spectrum_ok(c));

  CHECK_THROWS_AS(ds_unity_cycle(0, 2), PreconditionError);
}

TEST_CASE("ds_2x2 examples") {
  CHECK(ds_2x2(1).exact_matrix() == identity<Rational>(2));
  CHECK(ds_2x2(-1).exact_matrix() == from_ints(2, 2, {0, 1, 1, 0}));
  CHECK(ds_2x2(0).exact_matrix() == half_ones(2));
  CHECK(exactly_ds(ds_2x2(Rational(1, 3))));
  CHECK(spectrum_ok(ds_2x2(Rational(-2, 7))));
  CHECK_THROWS_AS(ds_2x2(Rational(3, 2)), InfeasibleError);
  CHECK_THROWS_AS(ds_2x2(Rational(-11, 10)), InfeasibleError);
}

TEST_CASE("ds_3x3_symmetric examples") {
  CHECK(ds_3x3_symmetric(1, 1).exact_matrix() == identity<Rational>(3));
  CHECK(ds_3x3_symmetric(1, -1).exact_matrix() == from_ints(3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0}));
  CHECK(ds_3x3_symmetric(0, 0).exact_matrix() == half_ones(3));
  // Swapped roles give the same matrix.
  CHECK(ds_3x3_symmetric(-1, 1).exact_matrix() == ds_3x3_symmetric(1, -1).exact_matrix());
  for (const auto& r : {ds_3x3_symmetric(1, -1), ds_3x3_symmetric(0, 0), ds_3x3_symmetric(Rational(1, 2), Rational(-1, 2))}) {
    CHECK(exactly_ds(r));
    CHECK(spectrum_ok(r));
    CHECK(r.exact_matrix() == MatrixQ(r.exact_matrix().transpose()));
  }
}

TEST_CASE("ds_3x3_symmetric names the violated inequality") {
  auto condition = [](const Rational& l, const Rational& m) {
    try {
      ds_3x3_symmetric(l, m);
    } catch (const InfeasibleError& e) {
      return e.condition();
    }
    return std::string("feasible");
  };
  CHECK(condition(2, 0) == "-1 ≤ λ ≤ 1");
  CHECK(condition(0, Rational(-3, 2)) == "-1 ≤ μ ≤ 1");
  CHECK(condition(Rational(1, 2), Rational(-5, 6)) == "feasible");
  CHECK(condition(Rational(1, 2), -1) == "λ + 3μ + 2 ≥ 0");
  CHECK(condition(0, -1) == "λ + 3μ + 2 ≥ 0");
  CHECK(condition(-1, 0) == "3λ + μ + 2 ≥ 0");
}

TEST_CASE("pi3_contains examples") {
  CHECK(pi3_contains(0.0));
  CHECK(pi3_contains(1.0));
  CHECK_FALSE(pi3_contains(ComplexF(0.9, 0.9)));
  CHECK(pi3_contains(std::polar(1.0, 2 * std::numbers::pi / 3)));
  CHECK(pi3_contains(-0.5));
  CHECK_FALSE(pi3_contains(-0.6));
  CHECK_FALSE(pi3_contains(1.01));
}

TEST_CASE("ds_3x3_complex examples") {
  const auto one = ds_3x3_complex(ComplexF(1.0, 0.0));
  CHECK((one.numeric_matrix() - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-15);

  const auto rot = ds_3x3_complex(std::polar(1.0, 2 * std::numbers::pi / 3));
  Eigen::MatrixXd cyc(3, 3);
  cyc << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  CHECK((rot.numeric_matrix() - cyc).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(rot.certificate.doubly_stochastic);

  const auto zero = ds_3x3_complex(ComplexF(0.0, 0.0));
  CHECK((zero.numeric_matrix() - Eigen::MatrixXd::Constant(3, 3, 1.0 / 3)).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(ds_3x3_complex(ComplexF(0.9, 0.9)), InfeasibleError);
}

TEST_CASE("ds_3x3_complex exact parametrization") {
  // z = re + i im_sqrt3 / sqrt(3)
  CHECK(ds_3x3_complex(Rational(1), Rational(0)).exact_matrix() == identity<Rational>(3));
  CHECK(ds_3x3_complex(Rational(0), Rational(0)).exact_matrix() == half_ones(3));
  CHECK(ds_3x3_complex(Rational(-1, 2), Rational(3, 2)).exact_matrix() ==
        from_ints(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
  CHECK_THROWS_AS(ds_3x3_complex(Rational(1), Rational(1, 10)), InfeasibleError);

  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexF z(coord(rng), coord(rng));
    if (!pi3_contains(z)) {
      CHECK_THROWS_AS(ds_3x3_complex(z), InfeasibleError);
      continue;
    }
    const auto numeric = ds_3x3_complex(z);
    CHECK(numeric.certificate.doubly_stochastic);
    CHECK(same_multiset(numeric.claimed_spectrum, {1.0, z, std::conj(z)}));
    // Compare against the eigenvalues of the numeric matrix itself.
    Eigen::EigenSolver<Eigen::MatrixXd> es(numeric.numeric_matrix());
    std::vector<ComplexF> ev(es.eigenvalues().data(), es.eigenvalues().data() + 3);
    CHECK(same_multiset(ev, numeric.claimed_spectrum, 1e-9));
  }
}

TEST_CASE("perron_bound") {
  const auto real = perron_bound({-1.0, 0.5});
  CHECK(real.has_real_entry);
  CHECK(real.perron == doctest::Approx(2.0));
  CHECK(real.spectrum.size() == 3);

  const auto pair = perron_bound({ComplexF(0.5, 2.0), ComplexF(0.5, -2.0)});
  CHECK_FALSE(pair.has_real_entry);
  CHECK(pair.perron == doctest::Approx(6.0));

  CHECK_THROWS_AS(perron_bound({ComplexF(0.5, 2.0)}), PreconditionError);
}

TEST_CASE("odd-length (1, 0, ..., 0, -1) never gets a DS certificate") {
  for (int len : {3, 5}) {
    std::vector<ComplexF> target(static_cast<std::size_t>(len), 0.0);
    target.front() = 1.0;
    target.back() = -1.0;
    std::vector<Rational> lams(static_cast<std::size_t>(len), Rational(0));
    lams.front() = 1;
    lams.back() = -1;

    std::vector<RealizationResult> candidates;
    auto attempt = [&](auto&& build) {
      try {
        candidates.push_back(build());
      } catch (const InfeasibleError&) {
      }
    };
    for (unsigned k = 1; k <= static_cast<unsigned>(len); ++k)
      if (len % k == 0) attempt([&] { return ds_unity_cycle(k, static_cast<unsigned>(len) / k); });
    attempt([&] { return suleimanova_realize(lams); });
    attempt([&] { return root_lift(from_ints(1, 1, {1}), static_cast<unsigned>(len)); });
    if (len == 3) {
      attempt([&] { return ds_3x3_symmetric(0, -1); });
      attempt([&] { return ds_3x3_symmetric(-1, 0); });
      attempt([&] { return ds_3x3_complex(Rational(0), Rational(0)); });
      attempt([&] { return ds_3x3_complex(ComplexF(-1.0, 0.0)); });
    }
    CHECK(candidates.size() >= 3);
    for (const auto& c : candidates) {
      const bool spectrum_hit = same_multiset(oracle_spectrum(c), target, 1e-8);
      CHECK_FALSE((c.certificate.doubly_stochastic && spectrum_hit));
    }
  }
}
