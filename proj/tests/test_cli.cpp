#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dlcat/cli.hpp"

using namespace dlc;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json strip_timing(json j) {
  j["total_ms"] = 0;
  for (auto& l : j["laws"]) l["ms"] = 0;
  return j;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("list-laws prints the whole table") {
  const Result r = run({"list-laws"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 24);
  CHECK(r.out.rfind("L1 ", 0) == 0);
}

TEST_CASE("json report layout") {
  const Result r = run({"check", "poly", "--cases", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  for (const char* key : {"model", "semiring", "params", "seed", "laws", "all_pass", "total_ms"})
    CHECK(j.contains(key));
  CHECK(j["model"] == "poly");
  CHECK(j["seed"] == 42);
  CHECK(j["params"]["cases"] == 5);
  CHECK(j["all_pass"] == true);
  REQUIRE(j["laws"].size() == 24);
  for (const auto& l : j["laws"]) {
    for (const char* key : {"id", "citation", "status", "cases", "ms"}) CHECK(l.contains(key));
    CHECK(l.contains("reason") == (l["status"] == "skipped"));
    CHECK_FALSE(l.contains("counterexample"));
  }
}

TEST_CASE("text and json agree on statuses") {
  const Result t = run({"check", "rel", "--cases", "3", "--truncation", "4"});
  const Result j = run({"check", "rel", "--cases", "3", "--truncation", "4", "--format", "json"});
  REQUIRE(t.code == 0);
  REQUIRE(j.code == 0);
  for (const auto& l : json::parse(j.out)["laws"]) {
    const std::string id = l["id"];
    const std::string status = l["status"] == "pass" ? "PASS" : l["status"] == "fail" ? "FAIL" : "SKIP";
    const auto line = t.out.find("\n" + id + " ");
    REQUIRE(line != std::string::npos);
    const auto eol = t.out.find('\n', line + 1);
    CHECK(t.out.substr(line, eol - line).find(status) != std::string::npos);
  }
}

TEST_CASE("sabotage fails with exit code 1 and a counterexample") {
  const Result r = run({"check", "poly", "--sabotage", "--cases", "20", "--format", "json"});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["all_pass"] == false);
  bool saw = false;
  for (const auto& l : j["laws"])
    if (l["status"] == "fail") {
      saw = true;
      CHECK(l["counterexample"].contains("input"));
      CHECK(l["counterexample"]["lhs"] != l["counterexample"]["rhs"]);
    }
  CHECK(saw);
}

TEST_CASE("usage errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "nonsense"},
           {"check", "poly", "--dim", "2"},
           {"check", "smooth", "--semiring", "boolean"},
           {"check", "poly", "--semiring", "integers"},
           {"check", "rel", "--margin", "1"},
           {"check", "poly", "--format", "xml"},
           {"poly", "--expr", "x +"},
           {"poly", "--expr", "x - 1"},
           {}}) {
    const Result r = run(args);
    INFO(r.err);
    CHECK(r.code == 2);
  }
}

TEST_CASE("poly subcommand") {
  Result r = run({"poly", "--expr", "d(x^2*y)"});
  CHECK(r.code == 0);
  CHECK(r.out == "[2*x*y, x^2]\n");
  r = run({"poly", "--expr", "d(x^2*y)", "--coord", "x"});
  CHECK(r.out == "2*x*y\n");
  r = run({"poly", "--expr", "d(x^2*y)", "--coord", "1"});
  CHECK(r.out == "x^2\n");
  r = run({"poly", "--expr", "x - 1", "--semiring", "rational"});
  CHECK(r.out == "x - 1\n");
  r = run({"poly", "--expr", "Kinv(x^2)", "--semiring", "natural"});
  CHECK(r.code == 1);
  r = run({"poly", "--expr", "d(x"});
  CHECK(r.err.find("^") != std::string::npos);
}

TEST_CASE("--output writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "dlcat_cli_output.json";
  std::filesystem::remove(path);
  const Result r = run({"check", "smooth", "--cases", "4", "--format", "json", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in);
  const json j = json::parse(in);
  CHECK(j["model"] == "smooth");
  std::filesystem::remove(path);
}

TEST_CASE("reports are reproducible from the seed") {
  const std::vector<std::string> args{"check", "poly", "--cases", "15", "--seed", "7", "--format", "json"};
  const json a = strip_timing(json::parse(run(args).out));
  const json b = strip_timing(json::parse(run(args).out));
  CHECK(a == b);
}
