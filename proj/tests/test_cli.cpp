#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& stdin_text = "") {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path() / ("bgpm_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto tag = std::to_string(counter++);
  const auto in = dir / ("in" + tag), out = dir / ("out" + tag), err = dir / ("err" + tag);
  std::ofstream(in) << stdin_text;
  const std::string cmd = std::string("'") + BGPM_CLI_PATH + "' " + args + " < '" + in.string() + "' > '" +
                          out.string() + "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

const char* kExample = R"({"n":4,"k":2,"shift":2,"scalar":"integer","blocks":[
  {"row":1,"entries":[["1","2"],["1","-1"]]},
  {"row":2,"entries":[["3","0"],["2","-2"]]},
  {"row":3,"entries":[["2","5"],["0","0"]]},
  {"row":4,"entries":[["5","1"],["-1","-1"]]}]})";

std::vector<double> real_parts(const json& eigenvalues) {
  std::vector<double> out;
  for (const auto& e : eigenvalues)
    for (int m = 0; m < e["multiplicity"].get<int>(); ++m) out.push_back(e["re"].get<double>());
  return out;
}

}  // namespace

TEST_CASE("spectrum of the worked example") {
  const auto r = run("spectrum --oracle", kExample);
  REQUIRE(r.code == 0);
  const json out = json::parse(r.out);
  CHECK(out["oracle_match"] == true);
  const auto re = real_parts(out["eigenvalues"]);
  REQUIRE(re.size() == 8);
  const double s7 = std::sqrt(7.0);
  CHECK(std::abs(re[1] + s7) < 1e-12);
  CHECK(std::abs(re[6] - s7) < 1e-12);
  CHECK(re[3] == 0.0);
  CHECK(re[4] == 0.0);
  CHECK(out["charpoly_factors"].size() == 2);
  CHECK(out["charpoly_factors"][1]["coeffs"] == json::parse(R"(["24","-19","1"])"));
  CHECK(out["charpoly_factors"][1]["exponent"] == 2);
}

TEST_CASE("spectrum of the identity document") {
  const auto doc = R"({"n":3,"k":2,"shift":0,"scalar":"rational","blocks":[
    {"row":1,"entries":[["1","0"],["0","1"]]},
    {"row":2,"entries":[["1","0"],["0","1"]]},
    {"row":3,"entries":[["1","0"],["0","1"]]}]})";
  const auto r = run("spectrum", doc);
  REQUIRE(r.code == 0);
  const json out = json::parse(r.out);
  REQUIRE(out["eigenvalues"].size() == 1);
  CHECK(out["eigenvalues"][0]["re"] == 1.0);
  CHECK(out["eigenvalues"][0]["multiplicity"] == 6);
}

TEST_CASE("spectrum reads --input and warns about zero blocks") {
  const auto path = std::filesystem::temp_directory_path() / "bgpm_cli_zero_block.json";
  std::ofstream(path) << R"({"n":2,"k":1,"shift":1,"scalar":"float","blocks":[
    {"row":1,"entries":[["0"]]},{"row":2,"entries":[["2.5"]]}]})";
  const auto r = run("spectrum --oracle --input '" + path.string() + "'");
  CHECK(r.code == 0);
  CHECK(r.err.find("block row 1") != std::string::npos);
  CHECK(json::parse(r.out)["eigenvalues"][0]["multiplicity"] == 2);
}

TEST_CASE("parse failures exit 2 with empty stdout") {
  auto r = run("spectrum", "{not json");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  r = run("spectrum", R"({"n":2,"k":1,"shift":1,"scalar":"rational","blocks":[{"row":1,"entries":[["1"]]}]})");
  CHECK(r.code == 2);
  CHECK(r.out.empty());

  r = run("spectrum --input /nonexistent/file.json");
  CHECK(r.code == 2);

  r = run("power", kExample);
  CHECK(r.code == 2);
  r = run("construct ds2");
  CHECK(r.code == 2);
  r = run("nonsense");
  CHECK(r.code == 2);
  r = run("construct ds2 --lambda abc");
  CHECK(r.code == 2);
}

TEST_CASE("charpoly and power") {
  auto r = run("charpoly --dense", kExample);
  REQUIRE(r.code == 0);
  json out = json::parse(r.out);
  CHECK(out["order"] == 2);
  // det(xI - U) = x^8 - 26x^6 + 157x^4 - 168x^2
  CHECK(out["dense_charpoly"] == json::parse(R"(["0","0","-168","0","157","0","-26","0","1"])"));

  r = run("power --order", kExample);
  REQUIRE(r.code == 0);
  out = json::parse(r.out);
  CHECK(out["shift"] == 0);
  CHECK(out["blocks"][1]["entries"] == json::parse(R"([["15","3"],["12","4"]])"));

  // Output documents feed back in.
  const auto again = run("power --r 1", r.out);
  REQUIRE(again.code == 0);
  CHECK(again.out == r.out);

  r = run("power --r 3", kExample);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["shift"] == 2);
}

TEST_CASE("construct examples") {
  auto r = run("construct ds2 --lambda -1");
  REQUIRE(r.code == 0);
  json out = json::parse(r.out);
  CHECK(out["matrix"] == json::parse(R"([["0","1"],["1","0"]])"));
  CHECK(out["certificate"]["doubly_stochastic"] == true);
  CHECK(out["certificate"]["mode"] == "exact");

  r = run("construct ds3-sym --lambda 2 --mu 0");
  CHECK(r.code == 4);
  CHECK(r.out.empty());
  CHECK(r.err.find("-1 ≤ λ ≤ 1 violated") != std::string::npos);

  r = run("construct ds3-complex --re 0 --im 0");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["matrix"] == json::parse(R"([["1/3","1/3","1/3"],["1/3","1/3","1/3"],["1/3","1/3","1/3"]])"));

  r = run("construct ds3-complex --re 0.9 --im 0.9");
  CHECK(r.code == 4);

  r = run("construct ds3-complex --re 0.1 --im 0.2");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["certificate"]["mode"] == "tolerance");

  r = run("construct suleimanova --lambdas 2,-1,-1");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["matrix"] == json::parse(R"([["0","1","0"],["0","0","1"],["2","3","0"]])"));

  r = run("construct suleimanova --lambdas 1,-1,-1");
  CHECK(r.code == 4);

  r = run("construct root-lift --matrix '[[\"1/2\",\"1/2\"],[\"1/2\",\"1/2\"]]' --n 2");
  REQUIRE(r.code == 0);
  out = json::parse(r.out);
  CHECK(out["matrix"].size() == 4);
  CHECK(out["certificate"]["doubly_stochastic"] == true);

  r = run("construct --lift 2 ds-unity --k 2 --n 3");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["matrix"].size() == 12);
}

TEST_CASE("fermat examples") {
  auto r = run("fermat example24 --t 2 --u 1 --v 1 --w 1");
  REQUIRE(r.code == 0);
  json out = json::parse(r.out);
  CHECK(out["verified"] == true);
  CHECK(out["a"] == "4");

  r = run("fermat uniform --a 1 --b 1 --c 2 --n 3");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["verified"] == true);

  r = run("fermat uniform --a 1 --b 1 --c -1 --n 3");
  CHECK(r.code == 4);
  CHECK(r.out.empty());

  r = run("fermat mixed --a 1 --b 1 --c 2 --p 2 --q 3 --r 6");
  REQUIRE(r.code == 0);
  const auto verified = run("verify", r.out);
  CHECK(verified.code == 0);
  CHECK(json::parse(verified.out)["verified"] == true);

  out = json::parse(r.out);
  out["X"][0][1] = "7";
  const auto rejected = run("verify", out.dump());
  CHECK(rejected.code == 1);
  CHECK(rejected.out.empty());

  r = run("fermat example24 --t 1 --u 1 --v 1 --w 1 --densify 1,1,1,1,1");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["X"][2][3] == "1");

  r = run("fermat example24 --t 1 --u 1 --v 1 --w 1 --densify 1,0,0,0,0");
  CHECK(r.code == 4);
  CHECK(r.err.find("shifts") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"spectrum --oracle", "charpoly --dense", "power --r 5"}) {
    const auto a = run(args, kExample), b = run(args, kExample);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
