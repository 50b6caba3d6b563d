#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlcat/lawsuite.hpp"

using namespace dlc;
using namespace dlc::laws;

namespace {

const LawReport& find(const std::vector<LawReport>& reports, const std::string& id) {
  for (const auto& r : reports)
    if (r.id == id) return r;
  throw std::out_of_range(id);
}

std::string summary(const std::vector<LawReport>& reports) {
  std::string s;
  for (const auto& r : reports)
    if (r.status == LawStatus::fail) s += r.id + ": " + r.counterexample->input + "; ";
  return s;
}

}  // namespace

TEST_CASE("law table is closed and ordered") {
  const auto& t = law_table();
  REQUIRE(t.size() == 24);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(static_cast<std::size_t>(t[i].id) == i + 1);
    CHECK(t[i].code == "L" + std::to_string(i + 1));
    CHECK_FALSE(t[i].citation.empty());
    CHECK(parse_law_id(t[i].code) == t[i].id);
  }
  CHECK_FALSE(parse_law_id("L25"));
  CHECK_FALSE(parse_law_id("l1"));
}

TEST_CASE("polynomial suite passes over the non-negative rationals") {
  const auto reports = run_suite(make_poly_binding({}), 40, 42);
  INFO(summary(reports));
  CHECK(all_pass(reports));
  CHECK(find(reports, "L24").status == LawStatus::skipped);
  CHECK(find(reports, "L1").status == LawStatus::pass);
}

TEST_CASE("polynomial suite over the other semirings") {
  for (const std::string rig : {"rational", "boolean"}) {
    PolyConfig c;
    c.semiring = rig;
    const auto reports = run_suite(make_poly_binding(c), 20, 1);
    INFO(rig, " ", summary(reports));
    CHECK(all_pass(reports));
  }
}

TEST_CASE("naturals skip every law that integrates") {
  PolyConfig c;
  c.semiring = "natural";
  const auto reports = run_suite(make_poly_binding(c), 20, 3);
  CHECK(all_pass(reports));
  const LawReport& ftc = find(reports, "L16");
  CHECK(ftc.status == LawStatus::skipped);
  CHECK(ftc.skip_reason.find("inverses of positive integers") != std::string::npos);
  CHECK(find(reports, "L2").status == LawStatus::pass);  // Leibniz needs no division
}

TEST_CASE("sabotaged derivative is caught with a counterexample") {
  PolyConfig c;
  c.sabotage_constants = true;
  const auto reports = run_suite(make_poly_binding(c), 20, 42);
  CHECK_FALSE(all_pass(reports));
  const LawReport& leibniz = find(reports, "L2");
  REQUIRE(leibniz.status == LawStatus::fail);
  REQUIRE(leibniz.counterexample);
  CHECK(leibniz.counterexample->lhs != leibniz.counterexample->rhs);
  CHECK(leibniz.cases >= 1);
}

TEST_CASE("relational suite passes, and idempotence is required only by the last law") {
  RelConfig c;
  c.truncation = 4;
  auto reports = run_suite(make_rel_binding(c), 6, 42);
  INFO(summary(reports));
  CHECK(all_pass(reports));
  CHECK(find(reports, "L24").skip_reason.find("not additively idempotent") != std::string::npos);
  CHECK(find(reports, "L5").status == LawStatus::skipped);

  c.semiring = "boolean";
  reports = run_suite(make_rel_binding(c), 6, 42);
  INFO(summary(reports));
  CHECK(all_pass(reports));
  CHECK(find(reports, "L24").status == LawStatus::pass);
}

TEST_CASE("smooth suite passes its mask and skips the rest") {
  const auto reports = run_suite(make_smooth_binding({}), 30, 42);
  INFO(summary(reports));
  CHECK(all_pass(reports));
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.status == LawStatus::pass) ++passed;
    CHECK_FALSE(r.exact);
  }
  CHECK(passed == 9);
  CHECK(find(reports, "L1").status == LawStatus::skipped);
}

TEST_CASE("a law's outcome does not depend on the others") {
  const ModelBinding b = make_poly_binding({});
  const auto reports = run_suite(b, 30, 9);
  for (LawId id : {LawId::L2, LawId::L13, LawId::L20}) {
    const LawReport alone = run_law(id, b, 30, 9);
    const LawReport& in_suite = find(reports, law_info(id).code);
    CHECK(alone.status == in_suite.status);
    CHECK(alone.cases == in_suite.cases);
  }
}

TEST_CASE("same seed, same sabotage counterexample") {
  PolyConfig c;
  c.sabotage_constants = true;
  const ModelBinding b = make_poly_binding(c);
  const LawReport a = run_law(LawId::L2, b, 50, 5), z = run_law(LawId::L2, b, 50, 5);
  REQUIRE(a.counterexample);
  CHECK(a.counterexample->input == z.counterexample->input);
  CHECK(a.cases == z.cases);
}

TEST_CASE("a masked law without a check is a binding error") {
  ModelBinding b = make_poly_binding({});
  b.checks.erase(LawId::L3);
  CHECK_THROWS_AS(run_law(LawId::L3, b, 5, 1), UnboundOperator);
}

TEST_CASE("bad configurations are rejected") {
  PolyConfig p;
  p.semiring = "integers";
  CHECK_THROWS_AS(make_poly_binding(p), std::invalid_argument);
  p = {};
  p.vars = 0;
  CHECK_THROWS_AS(make_poly_binding(p), std::invalid_argument);
  RelConfig r;
  r.margin = 1;
  CHECK_THROWS_AS(make_rel_binding(r), std::invalid_argument);
  r = {};
  r.base_size = 0;
  CHECK_THROWS_AS(make_rel_binding(r), std::invalid_argument);
  SmoothConfig s;
  s.order = 1;
  CHECK_THROWS_AS(make_smooth_binding(s), std::invalid_argument);
}
