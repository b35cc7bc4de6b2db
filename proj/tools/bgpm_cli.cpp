// bgpm: JSON front end for the block generalized permutation matrix library.
//
// Exit codes: 0 success, 1 oracle mismatch or failed verification, 2 bad
// input or flags, 3 root finder did not converge, 4 infeasible parameters,
// 5 internal verification failure. stdout carries JSON only on success.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgpm/charpoly.hpp"
#include "bgpm/document.hpp"
#include "bgpm/errors.hpp"
#include "bgpm/fermat.hpp"
#include "bgpm/iep.hpp"
#include "bgpm/multiset.hpp"
#include "bgpm/spectral.hpp"

namespace {

using bgpm::io::json;

enum Exit : int {
  kOk = 0,
  kMismatch = 1,
  kBadInput = 2,
  kNonConvergence = 3,
  kInfeasible = 4,
  kInternal = 5,
};

// Failure raised by a command after it has written its own diagnostic.
struct CommandFailure {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw bgpm::ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw bgpm::ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void warn_zero_blocks(const bgpm::io::AnyBlockGpm& u) {
  const auto rows = std::visit([](const auto& m) { return m.zero_block_rows(); }, u);
  for (auto r : rows) std::cerr << "warning: block row " << r << " is entirely zero\n";
}

json factors_to_json(const std::vector<bgpm::PolyFactor>& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back({{"coeffs", bgpm::io::to_json(f.poly)}, {"exponent", f.exponent}});
  return out;
}

json complex_coeffs(const bgpm::PolynomialC& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back({{"re", c.real() == 0.0 ? 0.0 : c.real()}, {"im", c.imag() == 0.0 ? 0.0 : c.imag()}});
  return out;
}

// Eigenvalues of dense(u) from its characteristic polynomial.
std::vector<bgpm::Root> dense_oracle(const bgpm::io::AnyBlockGpm& u) {
  if (const auto* c = std::get_if<bgpm::BlockGpmC>(&u))
    return bgpm::poly_roots(bgpm::char_poly_float(bgpm::to_dense(*c)));
  const bgpm::BlockGpmQ q = std::holds_alternative<bgpm::BlockGpmQ>(u)
                                ? std::get<bgpm::BlockGpmQ>(u)
                                : bgpm::convert<bgpm::Rational>(std::get<bgpm::BlockGpmZ>(u));
  return bgpm::poly_roots(bgpm::char_poly_exact(bgpm::to_dense(q)));
}

bgpm::BlockGpmQ as_rational(const bgpm::io::AnyBlockGpm& u) {
  if (const auto* q = std::get_if<bgpm::BlockGpmQ>(&u)) return *q;
  if (const auto* z = std::get_if<bgpm::BlockGpmZ>(&u)) return bgpm::convert<bgpm::Rational>(*z);
  throw bgpm::DomainMismatch("exact characteristic polynomials need an integer or rational document");
}

// ---- spectrum / charpoly / power ----

json cmd_spectrum(const std::string& input, bool oracle, double tol) {
  const auto u = bgpm::io::parse_bgpm_text(read_input(input));
  warn_zero_blocks(u);
  const auto result = std::visit([](const auto& m) { return bgpm::bgpm_spectrum(m); }, u);
  json out;
  out["eigenvalues"] = bgpm::io::spectrum_to_json(result.eigenvalues);
  out["charpoly_factors"] = result.exact_factors ? factors_to_json(*result.exact_factors) : json::array();
  if (result.charpoly) out["charpoly"] = bgpm::io::to_json(*result.charpoly);
  if (oracle) {
    const auto report = bgpm::multiset_match(result.eigenvalues, dense_oracle(u), tol);
    out["oracle_match"] = report.matched;
    if (!report.matched) {
      std::ostringstream msg;
      msg << "oracle mismatch at tol " << tol << ": " << report.unmatched_a.size() << " structured and "
          << report.unmatched_b.size() << " dense eigenvalues unpaired";
      throw CommandFailure{kMismatch, msg.str()};
    }
  }
  return out;
}

json cmd_charpoly(const std::string& input, bool dense) {
  const auto u = bgpm::io::parse_bgpm_text(read_input(input));
  warn_zero_blocks(u);
  json out;
  if (const auto* c = std::get_if<bgpm::BlockGpmC>(&u)) {
    out["charpoly_factors"] = json::array();
    out["dense_charpoly"] = complex_coeffs(bgpm::char_poly_float(bgpm::to_dense(*c)));
    return out;
  }
  const auto q = as_rational(u);
  const auto factors = bgpm::charpoly_of_dth_power(q);
  out["order"] = q.perm().order();
  out["charpoly_factors"] = factors_to_json(factors);
  out["power_charpoly"] = bgpm::io::to_json(bgpm::expand_factors(factors));
  if (dense) out["dense_charpoly"] = bgpm::io::to_json(bgpm::char_poly_exact(bgpm::to_dense(q)));
  return out;
}

json cmd_power(const std::string& input, std::optional<long> r, bool order) {
  const auto u = bgpm::io::parse_bgpm_text(read_input(input));
  warn_zero_blocks(u);
  return std::visit(
      [&](const auto& m) -> json {
        const long e = order ? static_cast<long>(m.perm().order()) : *r;
        if (e < 1) throw bgpm::PreconditionError("--r must be >= 1");
        return bgpm::io::to_json(bgpm::io::AnyBlockGpm(bgpm::power(m, e)));
      },
      u);
}

// ---- construct ----

json certificate_json(const bgpm::iep::Certificate& c) {
  return {{"nonnegative", c.nonnegative},
          {"doubly_stochastic", c.doubly_stochastic},
          {"mode", c.mode == bgpm::iep::CertificateMode::Exact ? "exact" : "tolerance"}};
}

json realization_json(const bgpm::iep::RealizationResult& r) {
  json out;
  out["matrix"] = r.exact() ? bgpm::io::to_json(r.exact_matrix()) : bgpm::io::to_json(r.numeric_matrix());
  out["scalar"] = r.exact() ? "rational" : "float";
  out["spectrum"] = bgpm::io::spectrum_to_json(r.claimed_spectrum);
  out["certificate"] = certificate_json(r.certificate);
  return out;
}

std::vector<bgpm::Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<bgpm::Rational> out;
  for (const auto& s : items) out.push_back(bgpm::parse_rational(s));
  return out;
}

// ---- fermat ----

std::vector<bgpm::BigInt> parse_bigints(const std::vector<std::string>& items) {
  std::vector<bgpm::BigInt> out;
  for (const auto& s : items) out.push_back(bgpm::parse_bigint(s));
  return out;
}

json family_json(const bgpm::fermat::FermatFamily& f) {
  const auto check = bgpm::fermat::verify_identity(f);
  if (!check.ok) throw CommandFailure{kInternal, "generated family fails a X^p + b Y^q = c Z^r"};
  json out = bgpm::io::to_json(f);
  out["verified"] = true;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block generalized permutation matrices: spectra, constructions, Fermat-type identities"};
  app.require_subcommand(1);

  std::function<json()> run;

  // spectrum
  std::string input;
  bool oracle = false;
  double tol = 1e-8;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of a BGPM document");
  spectrum->add_option("--input", input, "Document path (default: stdin)");
  spectrum->add_flag("--oracle", oracle, "Cross-check against the dense characteristic polynomial");
  spectrum->add_option("--tol", tol, "Oracle matching tolerance")->check(CLI::NonNegativeNumber);
  spectrum->callback([&] { run = [&] { return cmd_spectrum(input, oracle, tol); }; });

  // charpoly
  bool dense = false;
  auto* charpoly = app.add_subcommand("charpoly", "Factored characteristic polynomial of U^d");
  charpoly->add_option("--input", input, "Document path (default: stdin)");
  charpoly->add_flag("--dense", dense, "Also expand det(xI - U) of the dense matrix");
  charpoly->callback([&] { run = [&] { return cmd_charpoly(input, dense); }; });

  // power
  long r = 0;
  bool order = false;
  auto* power = app.add_subcommand("power", "U^r as a BGPM document");
  power->add_option("--input", input, "Document path (default: stdin)");
  auto* r_opt = power->add_option("--r", r, "Exponent (>= 1)");
  auto* order_opt = power->add_flag("--order", order, "Use the order d of the shift permutation");
  r_opt->excludes(order_opt);
  power->callback([&] {
    if (!*r_opt && !order) throw CLI::ValidationError("power", "one of --r or --order is required");
    run = [&] { return cmd_power(input, *r_opt ? std::optional<long>(r) : std::nullopt, order); };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Nonnegative and doubly stochastic realizations");
  construct->require_subcommand(1);
  std::vector<unsigned> lift;
  construct->add_option("--lift", lift, "Root-lift the result through these cycle lengths")->delimiter(',');

  auto with_lift = [&](bgpm::iep::RealizationResult base) {
    if (!lift.empty()) base = bgpm::iep::root_lift_chain(base, lift);
    return realization_json(base);
  };

  std::string matrix_text;
  std::vector<unsigned> ns;
  auto* root_lift = construct->add_subcommand("root-lift", "T_n(A) block cycle");
  root_lift->add_option("--matrix", matrix_text, "Square matrix as JSON rows of rational strings")->required();
  root_lift->add_option("--n", ns, "Cycle length, or a comma list for iterated lifting")->required()->delimiter(',');
  root_lift->callback([&] {
    run = [&] {
      const auto a = bgpm::io::parse_matrix<bgpm::Rational>(parse_json(matrix_text));
      return with_lift(bgpm::iep::root_lift_chain(a, ns));
    };
  });

  std::vector<std::string> lambdas;
  auto* suleimanova = construct->add_subcommand("suleimanova", "Companion matrix of a Suleimanova-type list");
  suleimanova->add_option("--lambdas", lambdas, "l1 > 0 >= l2 >= ... >= lk")->required()->delimiter(',');
  suleimanova->callback([&] {
    run = [&] { return with_lift(bgpm::iep::suleimanova_realize(parse_rationals(lambdas))); };
  });

  unsigned unity_k = 1, unity_n = 1;
  auto* ds_unity = construct->add_subcommand("ds-unity", "T_n(J_k): roots of unity plus zeros");
  ds_unity->add_option("--k", unity_k, "Block size")->required()->check(CLI::PositiveNumber);
  ds_unity->add_option("--n", unity_n, "Cycle length")->required()->check(CLI::PositiveNumber);
  ds_unity->callback([&] { run = [&] { return with_lift(bgpm::iep::ds_unity_cycle(unity_k, unity_n)); }; });

  std::string lambda, mu;
  auto* ds2 = construct->add_subcommand("ds2", "2x2 doubly stochastic with spectrum {1, lambda}");
  ds2->add_option("--lambda", lambda)->required();
  ds2->callback([&] { run = [&] { return with_lift(bgpm::iep::ds_2x2(bgpm::parse_rational(lambda))); }; });

  auto* ds3_sym = construct->add_subcommand("ds3-sym", "Symmetric 3x3 doubly stochastic with spectrum {1, lambda, mu}");
  ds3_sym->add_option("--lambda", lambda)->required();
  ds3_sym->add_option("--mu", mu)->required();
  ds3_sym->callback([&] {
    run = [&] {
      return with_lift(bgpm::iep::ds_3x3_symmetric(bgpm::parse_rational(lambda), bgpm::parse_rational(mu)));
    };
  });

  std::string re, im, im_sqrt3;
  auto* ds3_complex = construct->add_subcommand("ds3-complex", "3x3 circulant doubly stochastic with spectrum {1, z, conj z}");
  ds3_complex->add_option("--re", re)->required();
  auto* im_opt = ds3_complex->add_option("--im", im, "Imaginary part");
  auto* im3_opt = ds3_complex->add_option("--im-sqrt3", im_sqrt3, "sqrt(3) times the imaginary part (exact output)");
  im_opt->excludes(im3_opt);
  ds3_complex->callback([&] {
    if (!*im_opt && !*im3_opt) throw CLI::ValidationError("ds3-complex", "one of --im or --im-sqrt3 is required");
    run = [&] {
      if (*im3_opt)
        return with_lift(bgpm::iep::ds_3x3_complex(bgpm::parse_rational(re), bgpm::parse_rational(im_sqrt3)));
      const double y = bgpm::parse_double(im);
      if (y == 0.0) return with_lift(bgpm::iep::ds_3x3_complex(bgpm::parse_rational(re), bgpm::Rational(0)));
      return with_lift(bgpm::iep::ds_3x3_complex(bgpm::ComplexF(bgpm::parse_double(re), y)));
    };
  });

  // fermat
  auto* fermat = app.add_subcommand("fermat", "Integer matrices with a X^p + b Y^q = c Z^r");
  fermat->require_subcommand(1);
  std::string a, b, c;
  long n = 0;
  unsigned p = 1, q = 1, rr = 1;
  std::vector<std::string> x_params, y_params, z_params;

  auto* uniform = fermat->add_subcommand("uniform", "Equal exponents n on n x n cycle matrices");
  uniform->add_option("--a", a)->required();
  uniform->add_option("--b", b)->required();
  uniform->add_option("--c", c)->required();
  uniform->add_option("--n", n)->required();
  uniform->add_option("--x-params", x_params, "Entries of block rows 2..n of X")->delimiter(',');
  uniform->add_option("--y-params", y_params, "Entries of block rows 2..n of Y")->delimiter(',');
  uniform->add_option("--z-params", z_params, "Entries of block rows 2..n of Z")->delimiter(',');
  uniform->callback([&] {
    run = [&] {
      return family_json(bgpm::fermat::solve_uniform(bgpm::parse_bigint(a), bgpm::parse_bigint(b),
                                                     bgpm::parse_bigint(c), n, parse_bigints(x_params),
                                                     parse_bigints(y_params), parse_bigints(z_params)));
    };
  });

  auto* mixed = fermat->add_subcommand("mixed", "Exponents p, q, r through lcm(p, q, r)");
  mixed->add_option("--a", a)->required();
  mixed->add_option("--b", b)->required();
  mixed->add_option("--c", c)->required();
  mixed->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  mixed->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  mixed->add_option("--r", rr)->required()->check(CLI::PositiveNumber);
  mixed->callback([&] {
    run = [&] {
      return family_json(bgpm::fermat::solve_mixed(bgpm::parse_bigint(a), bgpm::parse_bigint(b),
                                                   bgpm::parse_bigint(c), p, q, rr));
    };
  });

  std::string t, u, v, w;
  std::vector<std::string> densify;
  auto* example24 = fermat->add_subcommand("example24", "5x5 family with 4X^5 = Y^5 + 3Z^5");
  example24->add_option("--t", t)->required();
  example24->add_option("--u", u)->required();
  example24->add_option("--v", v)->required();
  example24->add_option("--w", w)->required();
  example24->add_option("--densify", densify, "r,a,b,c,d for D = rI + aX + bY + cZ + dZ^3")->delimiter(',');
  example24->callback([&] {
    run = [&] {
      auto family = bgpm::fermat::example24_family(bgpm::parse_bigint(t), bgpm::parse_bigint(u),
                                                   bgpm::parse_bigint(v), bgpm::parse_bigint(w));
      if (!densify.empty()) {
        if (densify.size() != 5) throw bgpm::ParseError("--densify takes exactly five coefficients r,a,b,c,d");
        const auto k = parse_bigints(densify);
        family = bgpm::fermat::densify_family(
            family, bgpm::fermat::example24_densify_terms(k[0], k[1], k[2], k[3], k[4]));
      }
      return family_json(family);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Exact check of a X^p + b Y^q = c Z^r");
  verify->add_option("--input", input, "JSON {a,b,c,p,q,r,X,Y,Z} (default: stdin)");
  verify->callback([&] {
    run = [&] {
      const auto f = bgpm::io::parse_family(parse_json(read_input(input)));
      const auto check = bgpm::fermat::verify_identity(f);
      if (!check.ok)
        throw CommandFailure{kMismatch, "identity fails; residual " + bgpm::io::to_json(check.residual).dump()};
      return json{{"verified", true}, {"residual", bgpm::io::to_json(check.residual)}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    const json out = run();
    std::cout << out.dump(2) << '\n';
    return kOk;
  } catch (const CommandFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const bgpm::NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const bgpm::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const bgpm::UnsupportedSign& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const bgpm::CoverageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const bgpm::NonCommuting& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const bgpm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
