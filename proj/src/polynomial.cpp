#include "bgpm/polynomial.hpp"

namespace bgpm {

std::vector<SquareFreeFactor> square_free_decomposition(const PolynomialQ& p) {
  if (p.is_zero()) throw DegenerateInput("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;

  PolynomialQ f = make_monic(p);
  PolynomialQ df = f.derivative();
  PolynomialQ a = gcd(f, df);
  PolynomialQ b = divmod(f, a).first;
  PolynomialQ c = divmod(df, a).first;
  PolynomialQ d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    PolynomialQ g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

PolynomialC to_complex(const PolynomialQ& p) {
  std::vector<ComplexF> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_complex(c));
  return PolynomialC(std::move(out));
}

}  // namespace bgpm
