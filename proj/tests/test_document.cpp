#include <doctest.h>

#include "bgpm/document.hpp"
#include "oracles.hpp"

using namespace bgpm;
using bgpm::io::json;

namespace {

const char* kExample = R"({
  "n": 4, "k": 2, "shift": 2, "scalar": "rational",
  "blocks": [
    {"row": 3, "entries": [["2", "5"], ["0", "0"]]},
    {"row": 1, "entries": [["1", "2"], ["1", "-1"]]},
    {"row": 2, "entries": [["3", "0"], ["2", "-2"]]},
    {"row": 4, "entries": [["5", "1"], ["-1", "-1"]]}
  ]
})";

void expect_parse_error(json doc) { CHECK_THROWS_AS(io::parse_bgpm(doc), ParseError); }

}  // namespace

TEST_CASE("parse a BGPM document") {
  const auto any = io::parse_bgpm_text(kExample);
  REQUIRE(std::holds_alternative<BlockGpmQ>(any));
  const auto& u = std::get<BlockGpmQ>(any);
  CHECK(u.n() == 4);
  CHECK(u.k() == 2);
  CHECK(u.shift() == 2);
  MatrixQ b3(2, 2);
  b3 << 2, 5, 0, 0;
  CHECK(u.block(3) == b3);
  CHECK(io::domain_of(any) == ScalarDomain::Rational);
}

TEST_CASE("scalar domains") {
  json doc = json::parse(kExample);
  doc["scalar"] = "integer";
  CHECK(std::holds_alternative<BlockGpmZ>(io::parse_bgpm(doc)));
  doc["scalar"] = "float";
  CHECK(std::holds_alternative<BlockGpmC>(io::parse_bgpm(doc)));
  doc["blocks"][0]["entries"][0][0] = "1/2";
  CHECK_THROWS_AS(io::parse_bgpm(doc), ParseError);
  doc["scalar"] = "integer";
  CHECK_THROWS_AS(io::parse_bgpm(doc), ParseError);
  doc["scalar"] = "rational";
  CHECK(std::get<BlockGpmQ>(io::parse_bgpm(doc)).block(3)(0, 0) == Rational(1, 2));
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(io::parse_bgpm_text("{not json"), ParseError);
  CHECK_THROWS_AS(io::parse_bgpm_text("[]"), ParseError);
  const json base = json::parse(kExample);

  json d = base;
  d.erase("k");
  expect_parse_error(d);

  d = base;
  d["shift"] = 4;
  expect_parse_error(d);

  d = base;
  d["n"] = 0;
  expect_parse_error(d);

  d = base;
  d["scalar"] = "real";
  expect_parse_error(d);

  d = base;
  d["blocks"][0]["row"] = 1;  // row 1 twice, row 3 missing
  expect_parse_error(d);

  d = base;
  d["blocks"][0]["row"] = 5;
  expect_parse_error(d);

  d = base;
  d["blocks"].erase(0);
  expect_parse_error(d);

  d = base;
  d["blocks"][1]["entries"] = json::parse(R"([["1","2","3"],["1","-1","0"]])");
  expect_parse_error(d);

  d = base;
  d["blocks"][1]["entries"] = json::parse(R"([["1","2"],["1"]])");
  expect_parse_error(d);

  d = base;
  d["blocks"][1]["entries"][0][0] = "x";
  expect_parse_error(d);

  d = base;
  d["blocks"][1]["entries"][0][0] = true;
  expect_parse_error(d);
}

TEST_CASE("round trip is exact") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = oracle::uniform_int(rng, 1, 5), k = oracle::uniform_int(rng, 1, 3);
    const auto u = oracle::random_bgpm(rng, n, k, oracle::uniform_int(rng, 0, static_cast<int>(n) - 1));
    const json doc = io::to_json(io::AnyBlockGpm(u));
    const auto back = io::parse_bgpm_text(doc.dump());
    CHECK(std::get<BlockGpmQ>(back) == u);
    CHECK(io::to_json(back).dump() == doc.dump());
  }

  // Floats keep every bit through the shortest decimal form.
  std::uniform_real_distribution<double> real(-1e3, 1e3);
  std::vector<MatrixC> blocks;
  for (int i = 0; i < 3; ++i) {
    MatrixC m(2, 2);
    for (Index r = 0; r < 2; ++r)
      for (Index c = 0; c < 2; ++c) m(r, c) = ComplexF(real(rng), 0.0);
    blocks.push_back(m);
  }
  const BlockGpmC f(ShiftPermutation(3, 2), blocks);
  CHECK(std::get<BlockGpmC>(io::parse_bgpm_text(io::to_json(io::AnyBlockGpm(f)).dump())) == f);

  // Integers beyond 64 bits.
  MatrixZ big(1, 1);
  big << parse_bigint("123456789012345678901234567890");
  const BlockGpmZ z(ShiftPermutation(1, 0), {big});
  CHECK(std::get<BlockGpmZ>(io::parse_bgpm_text(io::to_json(io::AnyBlockGpm(z)).dump())) == z);
}

TEST_CASE("spectrum output is sorted and merges identical values") {
  const std::vector<Root> roots{{{1.0, 0.0}, 1}, {{-1.0, 0.0}, 1}, {{0.0, 0.0}, 1}, {{0.0, -2.0}, 1}, {{0.0, 0.0}, 2}};
  const json out = io::spectrum_to_json(roots);
  REQUIRE(out.size() == 4);
  CHECK(out[0]["re"] == -1.0);
  CHECK(out[1]["im"] == -2.0);
  CHECK(out[2]["re"] == 0.0);
  CHECK(out[2]["multiplicity"] == 3);
  CHECK(out[3]["re"] == 1.0);
}

TEST_CASE("family round trip") {
  fermat::FermatFamily f;
  f.a = 4;
  f.b = -1;
  f.c = 3;
  f.p = f.q = f.r = 5;
  f.X = f.Y = f.Z = identity<BigInt>(2);
  f.n = 2;
  const auto back = io::parse_family(io::to_json(f));
  CHECK(back.a == f.a);
  CHECK(back.b == f.b);
  CHECK(back.p == 5);
  CHECK(back.X == f.X);

  json bad = io::to_json(f);
  bad["p"] = 0;
  CHECK_THROWS_AS(io::parse_family(bad), ParseError);
  bad = io::to_json(f);
  bad.erase("Z");
  CHECK_THROWS_AS(io::parse_family(bad), ParseError);
}
