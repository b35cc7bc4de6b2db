#include "bgpm/fermat.hpp"

#include <numeric>
#include <set>

#include "bgpm/block_gpm.hpp"

namespace bgpm::fermat {

namespace {

MatrixZ multiply_skip_zeros(const MatrixZ& x, const MatrixZ& y) {
  MatrixZ out = zeros<BigInt>(x.rows(), y.cols());
  for (Index i = 0; i < x.rows(); ++i)
    for (Index l = 0; l < x.cols(); ++l) {
      if (x(i, l).is_zero()) continue;
      for (Index j = 0; j < y.cols(); ++j)
        if (!y(l, j).is_zero()) out(i, j) += x(i, l) * y(l, j);
    }
  return out;
}

// Shift-1 monomial matrix whose cycle product is `product`; rows 2..n carry
// `params`, row 1 takes the quotient.
MatrixZ cycle_matrix(Index n, const BigInt& product, std::vector<BigInt> params, const char* name) {
  if (params.empty()) params.assign(static_cast<std::size_t>(n - 1), BigInt(1));
  if (static_cast<Index>(params.size()) != n - 1)
    throw PreconditionError(std::string(name) + " params: expected " + std::to_string(n - 1) + " entries, got " +
                            std::to_string(params.size()));
  BigInt divisor = 1;
  for (const auto& p : params) {
    if (p <= 0) throw PreconditionError(std::string(name) + " params must be positive integers");
    divisor *= p;
  }
  if (product % divisor != 0)
    throw PreconditionError(std::string(name) + " params: their product " + divisor.str() +
                            " does not divide the cycle product " + product.str());
  std::vector<MatrixZ> blocks;
  blocks.push_back(MatrixZ::Constant(1, 1, BigInt(product / divisor)));
  for (const auto& p : params) blocks.push_back(MatrixZ::Constant(1, 1, p));
  return to_dense(BlockGpmZ(ShiftPermutation(n, n == 1 ? 0 : 1), std::move(blocks)));
}

void check_signs(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (c <= 0 || a + b <= 0)
    throw UnsupportedSign("natural-entry construction needs c > 0 and a + b > 0 (got a=" + a.str() +
                          ", b=" + b.str() + ", c=" + c.str() + ")");
}

FermatFamily uniform_family(const BigInt& a, const BigInt& b, const BigInt& c, Index n,
                            const std::vector<BigInt>& x_params, const std::vector<BigInt>& y_params,
                            const std::vector<BigInt>& z_params) {
  check_signs(a, b, c);
  FermatFamily f;
  f.a = a;
  f.b = b;
  f.c = c;
  f.p = f.q = f.r = static_cast<unsigned>(n);
  f.n = n;
  f.X = cycle_matrix(n, c, x_params, "x");
  f.Y = cycle_matrix(n, c, y_params, "y");
  f.Z = cycle_matrix(n, BigInt(a + b), z_params, "z");
  f.params = {{"n", std::to_string(n)}, {"alpha", c.str()}, {"beta", c.str()}, {"gamma", BigInt(a + b).str()}};
  return f;
}

std::vector<long> uncovered_shifts(const MatrixZ& m) {
  std::set<long> missing;
  const Index n = m.rows();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).is_zero()) missing.insert(static_cast<long>(((j - i) % n + n) % n));
  return {missing.begin(), missing.end()};
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

MatrixZ integer_power(const MatrixZ& m, unsigned e) {
  require_square(m, "integer_power");
  MatrixZ result = identity<BigInt>(m.rows());
  MatrixZ base = m;
  while (e > 0) {
    if (e & 1U) result = multiply_skip_zeros(result, base);
    e >>= 1;
    if (e > 0) base = multiply_skip_zeros(base, base);
  }
  return result;
}

VerifyResult verify_identity(const BigInt& a, const BigInt& b, const BigInt& c, unsigned p, unsigned q, unsigned r,
                             const MatrixZ& X, const MatrixZ& Y, const MatrixZ& Z) {
  require_square(X, "verify_identity X");
  require_square(Y, "verify_identity Y");
  require_square(Z, "verify_identity Z");
  if (X.rows() != Y.rows() || X.rows() != Z.rows())
    throw DimensionError("verify_identity: X, Y, Z must have equal sizes");
  VerifyResult out;
  out.residual = integer_power(X, p) * a + integer_power(Y, q) * b - integer_power(Z, r) * c;
  out.ok = out.residual.isZero(0);
  return out;
}

VerifyResult verify_identity(const FermatFamily& f) {
  return verify_identity(f.a, f.b, f.c, f.p, f.q, f.r, f.X, f.Y, f.Z);
}

FermatFamily solve_uniform(const BigInt& a, const BigInt& b, const BigInt& c, Index n,
                           const std::vector<BigInt>& x_params, const std::vector<BigInt>& y_params,
                           const std::vector<BigInt>& z_params) {
  check_signs(a, b, c);
  if (n < 2) throw PreconditionError("solve_uniform: n must be at least 2");
  return uniform_family(a, b, c, n, x_params, y_params, z_params);
}

FermatFamily solve_mixed(const BigInt& a, const BigInt& b, const BigInt& c, unsigned p, unsigned q, unsigned r) {
  if (p == 0 || q == 0 || r == 0) throw PreconditionError("solve_mixed: exponents must be positive");
  const unsigned k = std::lcm(std::lcm(p, q), r);
  FermatFamily f = uniform_family(a, b, c, static_cast<Index>(k), {}, {}, {});
  f.X = integer_power(f.X, k / p);
  f.Y = integer_power(f.Y, k / q);
  f.Z = integer_power(f.Z, k / r);
  f.p = p;
  f.q = q;
  f.r = r;
  f.params.push_back({"k", std::to_string(k)});
  return f;
}

Example24Matrices example24_table(const BigInt& t, const BigInt& u, const BigInt& v, const BigInt& w) {
  auto place = [](std::initializer_list<std::pair<std::pair<int, int>, BigInt>> entries) {
    MatrixZ m = zeros<BigInt>(5, 5);
    for (const auto& [at, value] : entries) m(at.first - 1, at.second - 1) = value;
    return m;
  };
  Example24Matrices out;
  out.A = place({{{1, 2}, t * t * u * u * v * w * w},
                 {{2, 3}, u * v},
                 {{3, 4}, t * t * u * v * v * w * w},
                 {{4, 5}, u * w},
                 {{5, 1}, t * v}});
  out.B = place({{{1, 3}, t * u * u * v * w},
                 {{2, 4}, t * u * v * v * w},
                 {{3, 5}, t * u * v * w * w},
                 {{4, 1}, BigInt(1)},
                 {{5, 2}, t * t * u * v * w}});
  out.C = place({{{1, 4}, t * t * u * u * v * v * w * w},
                 {{2, 5}, u * v * w},
                 {{3, 1}, t * v * w},
                 {{4, 2}, t * u * w},
                 {{5, 3}, t * u * v}});
  return out;
}

FermatFamily example24_family(const BigInt& t, const BigInt& u, const BigInt& v, const BigInt& w) {
  if (t < 1 || u < 1 || v < 1 || w < 1) throw PreconditionError("example24_family: t, u, v, w must be >= 1");
  const BigInt m = t * u * v * w;
  // R on the shift i -> i + 2 of {1..5}; stuvw = 1 fixes s = 1/m.
  std::vector<MatrixQ> blocks;
  for (const Rational& entry : {Rational(u), Rational(v), Rational(w), Rational(BigInt(1), m), Rational(t)})
    blocks.push_back(MatrixQ::Constant(1, 1, entry));
  const BlockGpmQ R(ShiftPermutation(5, 2), std::move(blocks));

  auto scaled_integer = [&](Index e) {
    const MatrixQ q = to_dense(power(R, e)) * Rational(m);
    MatrixZ z(q.rows(), q.cols());
    for (Index i = 0; i < q.rows(); ++i)
      for (Index j = 0; j < q.cols(); ++j) {
        if (boost::multiprecision::denominator(q(i, j)) != 1)
          throw std::logic_error("example24_family: non-integral entry");
        z(i, j) = boost::multiprecision::numerator(q(i, j));
      }
    return z;
  };

  FermatFamily f;
  f.a = 4;
  f.b = -1;
  f.c = 3;
  f.p = f.q = f.r = 5;
  f.n = 5;
  f.X = scaled_integer(3);
  f.Y = scaled_integer(1);
  f.Z = scaled_integer(4);
  const auto table = example24_table(t, u, v, w);
  if (f.X != table.A || f.Y != table.B || f.Z != table.C)
    throw std::logic_error("example24_family: power route disagrees with the closed-form table");
  f.params = {{"t", t.str()}, {"u", u.str()}, {"v", v.str()}, {"w", w.str()}};
  return f;
}

DensifyResult densify_positive(std::span<const MatrixZ> generators, const std::vector<PolyTerm>& terms) {
  if (generators.empty()) throw PreconditionError("densify_positive: no generators");
  const Index n = generators.front().rows();
  for (const auto& g : generators) {
    require_square(g, "densify_positive");
    if (g.rows() != n) throw DimensionError("densify_positive: generators differ in size");
    if ((g.array() < BigInt(0)).any()) throw PreconditionError("densify_positive: generators must be nonnegative");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (multiply_skip_zeros(generators[i], generators[j]) != multiply_skip_zeros(generators[j], generators[i]))
        throw NonCommuting("densify_positive: generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " do not commute");

  MatrixZ D = zeros<BigInt>(n, n);
  for (const auto& term : terms) {
    if (term.coeff < 0) throw PreconditionError("densify_positive: coefficients must be natural numbers");
    if (term.exponents.size() > generators.size())
      throw PreconditionError("densify_positive: term has more exponents than generators");
    if (term.coeff.is_zero()) continue;
    MatrixZ monomial = identity<BigInt>(n);
    for (std::size_t g = 0; g < term.exponents.size(); ++g)
      if (term.exponents[g] > 0) monomial = multiply_skip_zeros(monomial, integer_power(generators[g], term.exponents[g]));
    D += monomial * term.coeff;
  }
  if (auto missing = uncovered_shifts(D); !missing.empty())
    throw CoverageError(missing, "densify_positive: D has zero entries on shifts {" + join(missing) + "} (mod " +
                                     std::to_string(n) + "); add terms whose cycle shifts cover them");

  DensifyResult out;
  out.D = D;
  for (const auto& g : generators) {
    MatrixZ dg = multiply_skip_zeros(D, g);
    if (auto missing = uncovered_shifts(dg); !missing.empty())
      throw CoverageError(missing, "densify_positive: a product D G has zero entries on shifts {" + join(missing) + "}");
    out.products.push_back(std::move(dg));
  }
  return out;
}

FermatFamily densify_family(const FermatFamily& family, const std::vector<PolyTerm>& terms) {
  if (family.p != family.q || family.p != family.r)
    throw PreconditionError("densify_family: needs equal exponents (D^p must factor out of every term)");
  const std::vector<MatrixZ> gens{family.X, family.Y, family.Z};
  auto dense = densify_positive(gens, terms);
  FermatFamily out = family;
  out.X = std::move(dense.products[0]);
  out.Y = std::move(dense.products[1]);
  out.Z = std::move(dense.products[2]);
  std::string coeffs;
  for (std::size_t i = 0; i < terms.size(); ++i) coeffs += (i ? "," : "") + terms[i].coeff.str();
  out.params.push_back({"densify", coeffs});
  return out;
}

std::vector<PolyTerm> example24_densify_terms(const BigInt& r, const BigInt& a, const BigInt& b, const BigInt& c,
                                              const BigInt& d) {
  return {{r, {0, 0, 0}}, {a, {1, 0, 0}}, {b, {0, 1, 0}}, {c, {0, 0, 1}}, {d, {0, 0, 3}}};
}

}  // namespace bgpm::fermat
