#include "bgpm/spectral.hpp"

#include "bgpm/charpoly.hpp"

namespace bgpm {

std::vector<PolyFactor> charpoly_of_dth_power(const BlockGpmQ& u) {
  const auto d = static_cast<unsigned>(u.perm().order());
  std::vector<PolyFactor> factors;
  // Orbits of i -> i + s are the residue classes mod g; 1..g are representatives.
  for (Index t = 1; t <= u.perm().cycle_count(); ++t) factors.push_back({char_poly_exact(cycle_product(u, t)), d});
  return factors;
}

PolynomialQ expand_factors(const std::vector<PolyFactor>& factors) {
  PolynomialQ out = PolynomialQ::constant(Rational(1));
  for (const auto& f : factors) out = out * f.poly.pow(f.exponent);
  return out;
}

namespace {

void append_dth_roots(std::vector<Root>& out, const std::vector<Root>& lambdas, unsigned d) {
  for (const auto& lambda : lambdas)
    for (const auto& mu : nth_roots(lambda.value, d)) out.push_back({mu, lambda.multiplicity});
}

}  // namespace

SpectrumResult bgpm_spectrum(const BlockGpmQ& u, const RootOptions& options) {
  const auto d = static_cast<unsigned>(u.perm().order());
  SpectrumResult result;
  result.exact_factors = charpoly_of_dth_power(u);
  PolynomialQ charpoly = PolynomialQ::constant(Rational(1));
  for (const auto& factor : *result.exact_factors) {
    // det(xI - U) restricted to one orbit is det(x^d I - C_t).
    charpoly = charpoly * factor.poly.substitute_power(d);
    append_dth_roots(result.eigenvalues, poly_roots(factor.poly, options), d);
  }
  result.charpoly = std::move(charpoly);
  return result;
}

SpectrumResult bgpm_spectrum(const BlockGpmZ& u, const RootOptions& options) {
  return bgpm_spectrum(convert<Rational>(u), options);
}

SpectrumResult bgpm_spectrum(const BlockGpmC& u, const RootOptions& options) {
  const auto d = static_cast<unsigned>(u.perm().order());
  SpectrumResult result;
  for (Index t = 1; t <= u.perm().cycle_count(); ++t)
    append_dth_roots(result.eigenvalues, poly_roots(char_poly_float(cycle_product(u, t)), options), d);
  return result;
}

template <class Scalar>
SpectrumResult circulant_spectrum(const CirculantSpec<Scalar>& c, const RootOptions& options) {
  if (c.coeffs.empty()) throw PreconditionError("circulant_spectrum: coefficient list is empty");
  const SpectrumResult base = bgpm_spectrum(c.base, options);
  SpectrumResult result;
  result.eigenvalues.reserve(base.eigenvalues.size());
  for (const auto& mu : base.eigenvalues) {
    ComplexF value = c.coeffs.back();
    for (std::size_t r = c.coeffs.size() - 1; r-- > 0;) value = value * mu.value + c.coeffs[r];
    result.eigenvalues.push_back({value, mu.multiplicity});
  }
  return result;
}

template SpectrumResult circulant_spectrum(const CirculantSpec<Rational>&, const RootOptions&);
template SpectrumResult circulant_spectrum(const CirculantSpec<BigInt>&, const RootOptions&);
template SpectrumResult circulant_spectrum(const CirculantSpec<ComplexF>&, const RootOptions&);

}  // namespace bgpm
