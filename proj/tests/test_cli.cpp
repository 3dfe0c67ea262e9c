// Drives the installed binary through a shell; the path arrives in CZONAL_BIN.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "czonal/expansion.hpp"
#include "czonal/polyalg.hpp"

namespace {

std::string binary() {
  const char* bin = std::getenv("CZONAL_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "CZONAL_BIN must point at the czonal binary");
  return bin;
}

std::string scratch_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/czonal_cli_XXXXXX";
    const char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

int run(const std::string& args) {
  const int status = std::system((binary() + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("decompose matches the library") {
  const std::string dir = scratch_dir();
  spit(dir + "/in.json",
       R"({"n": 2, "terms": [{"a": [1,0], "b": [1,0], "re": "1", "im": "0"}]})");
  REQUIRE(run("decompose --input " + dir + "/in.json --out " + dir + "/out.json") == 0);

  const auto emitted = nlohmann::json::parse(slurp(dir + "/out.json"));
  const auto got = czonal::polyalg::HarmonicComponents::from_json(emitted);
  const auto expected = czonal::polyalg::canonical_decompose(
      czonal::polyalg::BiPoly::from_json(nlohmann::json::parse(slurp(dir + "/in.json"))));
  CHECK(got == expected);
}

TEST_CASE("emitted artifacts re-parse to identical values") {
  const std::string dir = scratch_dir();
  REQUIRE(run("expand --profile 'plane-wave(2)' --n 2 --max-bidegree 6 --out " + dir +
              "/table.json") == 0);
  const auto parsed =
      czonal::expansion::ExpansionTable::from_json(nlohmann::json::parse(slurp(dir + "/table.json")));
  const auto direct = czonal::expansion::expand_profile(
      czonal::expansion::make_builtin_profile("plane-wave(2)", 2), 2, 6);
  REQUIRE(parsed.entries.size() == direct.entries.size());
  for (const auto& [pq, e] : direct.entries) CHECK(parsed.entries.at(pq).d == e.d);
}

TEST_CASE("poisson-szego table has the unit (0,0) row") {
  const std::string dir = scratch_dir();
  REQUIRE(run("poisson-szego --n 2 --r 0.5 --max-bidegree 5 --out " + dir + "/ps.csv") == 0);
  const auto csv = slurp(dir + "/ps.csv");
  CHECK(csv.substr(0, csv.find('\n', csv.find('\n') + 1)) == "p,q,r,S\n0,0,0.5,1");
}

TEST_CASE("verify runs clean at a small grid") {
  const std::string dir = scratch_dir();
  CHECK(run("verify --n 2 --max-bidegree 4 --out " + dir + "/report.json") == 0);
  const auto report = nlohmann::json::parse(slurp(dir + "/report.json"));
  CHECK(report.at("failures").get<long>() == 0);
  CHECK(report.at("checks").size() == 10);
  for (const auto& c : report.at("checks")) CHECK(c.at("pass").get<bool>());
}

TEST_CASE("quad exports the rule schema") {
  const std::string dir = scratch_dir();
  REQUIRE(run("quad --profile exp-re --n 3 --radial-points 5 --angular-points 9 "
              "--export-rule " +
              dir + "/rule.json --out " + dir + "/quad.json") == 0);
  const auto rule = nlohmann::json::parse(slurp(dir + "/rule.json"));
  CHECK(rule.at("alpha").get<int>() == 1);
  CHECK(rule.at("angular_points").get<int>() == 9);
  CHECK(rule.at("radial").size() == 5);
  CHECK(rule.at("radial")[0].contains("s"));
  CHECK(rule.at("radial")[0].contains("u"));
}

TEST_CASE("config file: unknown keys rejected, flags win") {
  const std::string dir = scratch_dir();
  spit(dir + "/cfg.json", R"({"max-bidegree": 3})");
  CHECK(run("disc-poly --gamma --n 2 --config " + dir + "/cfg.json --out " + dir +
            "/g.csv") == 0);
  spit(dir + "/bad.json", R"({"maxdeg": 3})");
  CHECK(run("disc-poly --gamma --n 2 --config " + dir + "/bad.json") == 1);
}

TEST_CASE("exit codes") {
  const std::string dir = scratch_dir();
  CHECK(run("decompose --input " + dir + "/does_not_exist.json") == 3);
  spit(dir + "/garbage.json", "{not json");
  CHECK(run("decompose --input " + dir + "/garbage.json") == 1);
  spit(dir + "/mixed.json",
       R"({"n": 2, "terms": [{"a": [1,0], "b": [0,0], "re": "1", "im": "0"},
                             {"a": [0,0], "b": [1,0], "re": "1", "im": "0"}]})");
  CHECK(run("decompose --input " + dir + "/mixed.json") == 1);  // not bihomogeneous
  CHECK(run("decompose") != 0);  // missing required flag
  CHECK(run("expand --profile nope --n 2") == 1);
  CHECK(run("expand --profile const --n 1") == 1);
  CHECK(run("poisson-szego --n 2 --r 1.5") == 1);
}

TEST_SUITE_END();
