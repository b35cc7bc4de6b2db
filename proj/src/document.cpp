#include "bgpm/document.hpp"

#include <algorithm>
#include <map>

namespace bgpm::io {

namespace {

template <class Scalar>
Scalar parse_scalar(const std::string& text) {
  if constexpr (std::is_same_v<Scalar, BigInt>)
    return parse_bigint(text);
  else if constexpr (std::is_same_v<Scalar, Rational>)
    return parse_rational(text);
  else
    return ComplexF(parse_double(text), 0.0);
}

std::string text_of(const BigInt& v) { return format(v); }
std::string text_of(const Rational& v) { return format(v); }
std::string text_of(const ComplexF& v) {
  if (v.imag() != 0.0) throw DomainMismatch("float documents hold real entries only");
  return format(v.real());
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

long integer_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

template <class Scalar>
BlockGpm<Scalar> parse_typed(const json& doc, long n, long k, long shift) {
  const json& blocks = field(doc, "blocks");
  if (!blocks.is_array()) throw ParseError("'blocks' must be an array");
  if (static_cast<long>(blocks.size()) != n)
    throw ParseError("'blocks' has " + std::to_string(blocks.size()) + " entries, expected n = " + std::to_string(n));
  std::vector<std::optional<Matrix<Scalar>>> slots(static_cast<std::size_t>(n));
  for (const auto& b : blocks) {
    const long row = integer_field(b, "row");
    if (row < 1 || row > n) throw ParseError("block row " + std::to_string(row) + " outside 1.." + std::to_string(n));
    auto& slot = slots[static_cast<std::size_t>(row - 1)];
    if (slot) throw ParseError("block row " + std::to_string(row) + " appears twice");
    Matrix<Scalar> m = parse_matrix<Scalar>(field(b, "entries"));
    if (m.rows() != k || m.cols() != k)
      throw ParseError("block row " + std::to_string(row) + " is not " + std::to_string(k) + "x" + std::to_string(k));
    slot = std::move(m);
  }
  std::vector<Matrix<Scalar>> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return BlockGpm<Scalar>(ShiftPermutation(n, shift), std::move(out));
}

template <class Scalar>
json typed_to_json(const BlockGpm<Scalar>& u) {
  json blocks = json::array();
  for (Index i = 1; i <= u.n(); ++i) {
    json rows = json::array();
    const auto& b = u.block(i);
    for (Index r = 0; r < b.rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < b.cols(); ++c) row.push_back(text_of(b(r, c)));
      rows.push_back(std::move(row));
    }
    blocks.push_back({{"row", i}, {"entries", std::move(rows)}});
  }
  return {{"n", u.n()},
          {"k", u.k()},
          {"shift", u.shift()},
          {"scalar", std::string(to_string(ScalarTraits<Scalar>::domain))},
          {"blocks", std::move(blocks)}};
}

bool lex_less(const ComplexF& a, const ComplexF& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double clean(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

std::string scalar_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return value.dump();
  throw ParseError("expected a string or number entry, got " + value.dump());
}

template <class Scalar>
Matrix<Scalar> parse_matrix(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const auto r = static_cast<Index>(rows.size());
  if (!rows.front().is_array() || rows.front().empty()) throw ParseError("matrix rows must be nonempty arrays");
  const auto c = static_cast<Index>(rows.front().size());
  Matrix<Scalar> m(r, c);
  for (Index i = 0; i < r; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) throw ParseError("matrix rows differ in length");
    for (Index j = 0; j < c; ++j) m(i, j) = parse_scalar<Scalar>(scalar_text(row[static_cast<std::size_t>(j)]));
  }
  return m;
}

template MatrixZ parse_matrix<BigInt>(const json&);
template MatrixQ parse_matrix<Rational>(const json&);
template MatrixC parse_matrix<ComplexF>(const json&);

ScalarDomain domain_of(const AnyBlockGpm& u) {
  return std::visit([](const auto& m) { return ScalarTraits<typename std::decay_t<decltype(m)>::scalar_type>::domain; },
                    u);
}

AnyBlockGpm parse_bgpm(const json& doc) {
  if (!doc.is_object()) throw ParseError("BGPM document must be a JSON object");
  const long n = integer_field(doc, "n");
  const long k = integer_field(doc, "k");
  const long shift = integer_field(doc, "shift");
  if (n < 1) throw ParseError("n must be >= 1");
  if (k < 1) throw ParseError("k must be >= 1");
  if (shift < 0 || shift >= n) throw ParseError("shift must lie in 0..n-1");
  const json& scalar = field(doc, "scalar");
  if (!scalar.is_string()) throw ParseError("'scalar' must be a string");
  switch (parse_domain(scalar.get<std::string>())) {
    case ScalarDomain::Integer:
      return parse_typed<BigInt>(doc, n, k, shift);
    case ScalarDomain::Rational:
      return parse_typed<Rational>(doc, n, k, shift);
    case ScalarDomain::Float:
      return parse_typed<ComplexF>(doc, n, k, shift);
  }
  throw ParseError("unknown scalar domain");
}

AnyBlockGpm parse_bgpm_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_bgpm(doc);
}

json to_json(const AnyBlockGpm& u) {
  return std::visit([](const auto& m) { return typed_to_json(m); }, u);
}

json to_json(const MatrixQ& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const MatrixZ& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const PolynomialQ& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(format(c));
  return coeffs;
}

json spectrum_to_json(const std::vector<Root>& roots) {
  std::vector<Root> sorted = merge_clusters(roots, 0.0);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Root& a, const Root& b) {
    if (lex_less(a.value, b.value)) return true;
    if (lex_less(b.value, a.value)) return false;
    return a.multiplicity < b.multiplicity;
  });
  json out = json::array();
  for (const auto& r : sorted)
    out.push_back({{"re", clean(r.value.real())}, {"im", clean(r.value.imag())}, {"multiplicity", r.multiplicity}});
  return out;
}

json spectrum_to_json(const std::vector<ComplexF>& values) {
  std::vector<Root> roots;
  for (const auto& v : values) roots.push_back({v, 1});
  return spectrum_to_json(roots);
}

json to_json(const fermat::FermatFamily& f) {
  json params = json::object();
  for (const auto& [key, value] : f.params) params[key] = value;
  return {{"a", f.a.str()}, {"b", f.b.str()}, {"c", f.c.str()}, {"p", f.p},       {"q", f.q},
          {"r", f.r},       {"X", to_json(f.X)}, {"Y", to_json(f.Y)}, {"Z", to_json(f.Z)}, {"params", params}};
}

fermat::FermatFamily parse_family(const json& doc) {
  if (!doc.is_object()) throw ParseError("verify input must be a JSON object");
  fermat::FermatFamily f;
  f.a = parse_bigint(scalar_text(field(doc, "a")));
  f.b = parse_bigint(scalar_text(field(doc, "b")));
  f.c = parse_bigint(scalar_text(field(doc, "c")));
  auto exponent = [&](const char* key) {
    const long e = integer_field(doc, key);
    if (e < 1) throw ParseError(std::string("exponent '") + key + "' must be positive");
    return static_cast<unsigned>(e);
  };
  f.p = exponent("p");
  f.q = exponent("q");
  f.r = exponent("r");
  f.X = parse_matrix<BigInt>(field(doc, "X"));
  f.Y = parse_matrix<BigInt>(field(doc, "Y"));
  f.Z = parse_matrix<BigInt>(field(doc, "Z"));
  f.n = f.X.rows();
  return f;
}

}  // namespace bgpm::io
