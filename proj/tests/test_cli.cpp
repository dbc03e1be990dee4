#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qrf/cli.hpp"
#include "qrf/json_io.hpp"
#include "qrf/perspective.hpp"

using namespace qrf;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qrf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "qrf_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<double> real_parts(const json& state) {
  std::vector<double> v;
  for (const auto& a : state["amplitudes"]) v.push_back(a[0].get<double>());
  return v;
}

}  // namespace

TEST_CASE("perspective command") {
  const auto r = invoke({"perspective", "--state", "worked-example", "--perspective", "B"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["n_qubits"] == 2);
  CHECK(doc["perspective_of"] == 1);
  const auto amps = real_parts(doc);
  const std::vector<double> want{1 / std::sqrt(2.0), 0.5, 0, 0.5};
  REQUIRE(amps.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(amps[i] - want[i]) <= 1e-12);

  const auto g = invoke({"perspective", "--state", "ghz:0.5", "--perspective", "0"});
  REQUIRE(g.code == 0);
  const auto ga = real_parts(json::parse(g.out));
  CHECK(std::abs(ga[0] - 1) <= 1e-12);
  CHECK(std::abs(ga[3]) <= 1e-12);
}

TEST_CASE("io errors") {
  const auto r = invoke({"perspective", "--state", "/nonexistent/state.json"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  const auto err = json::parse(r.err);
  CHECK(err["error"]["kind"] == "io");

  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{not json";
  CHECK(invoke({"perspective", "--state", bad.string()}).code == 2);
}

TEST_CASE("check command") {
  const auto rin = json::parse(invoke({"check", "--state", "rindler:0.5"}).out);
  CHECK(rin["parity"] == "even");
  CHECK(rin["results"]["entropy"]["transference_satisfied"] == true);
  CHECK(rin["results"]["linear"]["transference_satisfied"] == true);

  const auto sep = json::parse(invoke({"check", "--state", "sep-counterexample"}).out);
  CHECK(sep["results"]["entropy"]["corollary_satisfied"] == true);
  CHECK(sep["results"]["entropy"]["transference_satisfied"] == false);
  const auto& c1 = sep["results"]["entropy"]["transference"][0];
  CHECK(c1["constraint"] == "C1");
  CHECK(std::abs(c1["lhs"].get<double>() - c1["rhs"].get<double>() - 1.0) <= 1e-9);

  const auto ghz = json::parse(invoke({"check", "--state", "ghz:0.6", "--measures", "entropy"}).out);
  CHECK_FALSE(ghz["results"].contains("linear"));
  for (const auto& rep : ghz["results"]["entropy"]["transference"]) {
    CHECK(rep["satisfied"] == false);
  }

  // Two-qubit input is a shape error.
  const auto two = scratch("two.json");
  std::ofstream(two) << R"({"n_qubits": 2, "amplitudes": [[1,0],[0,0],[0,0],[0,0]]})";
  const auto r = invoke({"check", "--state", two.string()});
  CHECK(r.code == 3);
  CHECK(json::parse(r.err)["error"]["kind"] == "shape");
}

TEST_CASE("sweep command") {
  const auto r = invoke({"sweep", "--grid", "0:pi/4:3"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  int rows = 1;
  for (std::string l; std::getline(lines, l);) ++rows;
  CHECK(rows == 3);
  CHECK(first.rfind("0,entropy,", 0) == 0);

  const auto js = invoke({"sweep", "--grid", "0:pi/4:3", "--format", "json"});
  REQUIRE(js.code == 0);
  const auto arr = json::parse(js.out);
  REQUIRE(arr.size() == 3);
  CHECK(std::abs(arr[0]["MI_A_R"].get<double>() - 2.0) <= 1e-10);

  const auto top = json::parse(invoke({"sweep", "--grid", "pi/4:pi/4:1", "--format", "json"}).out);
  CHECK(std::abs(top[0]["MI_R_Rbar"].get<double>() - 1.5 * (2 - std::log2(3.0))) <= 1e-10);

  const auto both = json::parse(
      invoke({"sweep", "--grid", "0,0.5", "--measures", "both", "--format", "json"}).out);
  CHECK(both.size() == 4);

  const auto empty = invoke({"sweep", "--grid", ""});
  CHECK(empty.code == 4);
  CHECK(json::parse(empty.err)["error"]["kind"] == "domain");
  CHECK(invoke({"sweep", "--grid", "0:1:5"}).code == 4);
  CHECK(invoke({"sweep", "--grid", "0:pi/4:0"}).code == 4);
}

TEST_CASE("sample command") {
  const auto r = invoke({"sample", "--parity", "even", "--count", "100", "--seed", "42"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string last;
  int n = 0;
  for (std::string l; std::getline(lines, l); ++n) last = l;
  CHECK(n == 100 * 2 * 3 + 1);
  const auto summary = json::parse(last)["summary"];
  CHECK(summary["passed"]["entropy"] == 100);
  CHECK(summary["passed"]["linear"] == 100);

  const auto odd_out = invoke({"sample", "--parity", "odd", "--count", "50", "--seed", "7"}).out;
  const auto odd = json::parse(odd_out.substr(odd_out.rfind("{\"summary\"")));
  CHECK(odd["summary"]["passed"]["entropy"] == 50);

  const auto neither = invoke({"sample", "--parity", "neither", "--count", "100", "--seed", "1"});
  CHECK(neither.code == 0);
  const auto s = json::parse(neither.out.substr(neither.out.rfind("{\"summary\"")));
  MESSAGE("Haar samples passing all constraints (entropy): " << s["summary"]["passed"]["entropy"]);

  CHECK(invoke({"sample", "--count", "0"}).code == 4);
  CHECK(invoke({"sample", "--parity", "both"}).code == 4);
}

TEST_CASE("identical configs give byte-identical files") {
  const auto a = scratch("a.txt"), b = scratch("b.txt");
  for (const auto& p : {a, b}) {
    REQUIRE(invoke({"sample", "--count", "20", "--seed", "123456789012345", "--out", p.string()})
                .code == 0);
  }
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());

  for (const auto& p : {a, b}) {
    REQUIRE(invoke({"sweep", "--grid", "0:pi/4:33", "--measures", "both", "--out", p.string()})
                .code == 0);
  }
  CHECK(slurp(a) == slurp(b));

  CHECK(invoke({"sample", "--count", "2", "--out", "/nonexistent/dir/x"}).code == 2);
}

TEST_CASE("state file round trip through perspective is stable") {
  const auto first = scratch("first.json");
  REQUIRE(invoke({"perspective", "--state", "rindler:0.3", "--perspective", "Rbar", "--out",
                  first.string()})
              .code == 0);
  const auto once = read_state_file(first);

  // Re-embed with |0⟩ at the perspective slot and assign again.
  const auto embedded = scratch("embedded.json");
  std::ofstream(embedded) << state_to_json(embed_perspective(once, 2)).dump();
  const auto second = scratch("second.json");
  REQUIRE(invoke({"perspective", "--state", embedded.string(), "--perspective", "2", "--out",
                  second.string()})
              .code == 0);
  CHECK(slurp(first) == slurp(second));
}

TEST_CASE("parsers") {
  const auto g = cli::parse_grid("0:pi/4:5");
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == std::numbers::pi / 4);
  CHECK(cli::parse_grid("0.1,0.2").size() == 2);
  CHECK(cli::parse_grid("0.785398163397").back() == std::numbers::pi / 4);

  CHECK(cli::parse_perspective("A") == 0);
  CHECK(cli::parse_perspective("R") == 1);
  CHECK(cli::parse_perspective("Rbar") == 2);
  CHECK(cli::parse_perspective("C") == 2);
  CHECK_THROWS_AS(cli::parse_perspective("Q"), Error);
  CHECK(cli::parse_measures("both").size() == 2);
  CHECK_THROWS_AS(cli::parse_measures("quadratic"), Error);

  CHECK(cli::exit_code(ErrorKind::Io) == 2);
  CHECK(cli::exit_code(ErrorKind::WrongQubitCount) == 3);
  CHECK(cli::exit_code(ErrorKind::GridOutOfDomain) == 4);
  CHECK(cli::exit_code(ErrorKind::NotDiagonal) == 5);

  CHECK(cli::is_builtin("rindler:0.2"));
  CHECK_FALSE(cli::is_builtin("states/rindler.json"));
}

TEST_CASE("QRF_TOL overrides the default tolerance") {
  ::unsetenv("QRF_TOL");
  CHECK(cli::default_tolerance() == 1e-9);
  ::setenv("QRF_TOL", "1e-6", 1);
  CHECK(cli::default_tolerance() == 1e-6);
  const auto doc = json::parse(invoke({"check", "--state", "rindler:0.2"}).out);
  CHECK(doc["tolerance"] == 1e-6);
  ::unsetenv("QRF_TOL");
}
