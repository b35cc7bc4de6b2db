#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "bgpm/block_gpm.hpp"
#include "bgpm/fermat.hpp"
#include "bgpm/polynomial.hpp"
#include "bgpm/roots.hpp"

// JSON serialization for the command-line tool.
//
// BGPM document:
//   { "n": 4, "k": 2, "shift": 2, "scalar": "rational",
//     "blocks": [ { "row": 1, "entries": [["1","2"],["1","-1"]] }, ... ] }
// `row` is 1-based and every row 1..n appears exactly once. Entries are
// strings: "p/q" or decimals for rational, integers for integer, decimals
// for float.
namespace bgpm::io {

using json = nlohmann::json;

using AnyBlockGpm = std::variant<BlockGpmZ, BlockGpmQ, BlockGpmC>;

ScalarDomain domain_of(const AnyBlockGpm& u);

/// Throws ParseError on malformed or inconsistent documents.
AnyBlockGpm parse_bgpm(const json& doc);
AnyBlockGpm parse_bgpm_text(std::string_view text);
json to_json(const AnyBlockGpm& u);

template <class Scalar>
Matrix<Scalar> parse_matrix(const json& rows);
json to_json(const MatrixQ& m);
json to_json(const MatrixZ& m);
json to_json(const Eigen::MatrixXd& m);

json to_json(const PolynomialQ& p);

/// [{re, im, multiplicity}] sorted by (re, im) ascending; identical values
/// are reported once.
json spectrum_to_json(const std::vector<Root>& roots);
json spectrum_to_json(const std::vector<ComplexF>& values);

/// {a, b, c, p, q, r, X, Y, Z} with integers as strings.
json to_json(const fermat::FermatFamily& family);
fermat::FermatFamily parse_family(const json& doc);

/// Accepts a JSON string or number and returns its text.
std::string scalar_text(const json& value);

}  // namespace bgpm::io
