#include <string>

#include "cquat/scenario.hpp"
#include "doctest.h"

using namespace cquat;

namespace {

const std::string kHeader = "format = cquat-scenario/1\nname = t\n";

const std::string kBody = R"(
[map sq]
side = right
F1 = pow 2
F2 = pow 2

[curve c]
kind = circle
center = 0, 0, 0
radius = 1

[homotopy h]
boundary = c
target = 0, 0, 0.5

[suite one]
kind = t1
maps = sq
curves = c
)";

void expect_error(const std::string& text, std::size_t line, const std::string& field) {
  try {
    parse_scenario(text, "case.scn");
    FAIL("expected a scenario error");
  } catch (const ScenarioError& e) {
    CAPTURE(e.what());
    CHECK(e.line() == line);
    CHECK(e.field() == field);
    CHECK(std::string(e.what()).starts_with("case.scn:" + std::to_string(line)));
  }
}

}  // namespace

TEST_CASE("a complete scenario") {
  const Scenario sc = parse_scenario(kHeader + R"(
[generators]
a1 = i
a2 = 2i
b1 = 1+i
b2 = -1+i

[quadrature]
rule = left_endpoint
refinements = 16, 32, 64
slope_refinements = 16, 32, 64

[tolerances]
theorem = 1e-6   # trailing comment
residual_slope = 0.8, 1.2

[sampling]
s_grid = 0.5, 0.1
seed = 42
)" + kBody + R"(
[suite proof]
kind = proof
maps = sq
homotopies = h
rho = 0.5, 1
expect = pass
)");
  CHECK(sc.name == "t");
  CHECK(sc.settings.rule == Rule::left_endpoint);
  CHECK(sc.settings.refinements == std::vector<std::size_t>{16, 32, 64});
  CHECK(sc.settings.tol_theorem == 1e-6);
  CHECK(sc.settings.residual_slope_min == 0.8);
  CHECK(sc.settings.residual_slope_max == 1.2);
  CHECK(sc.settings.s_grid == std::vector<double>{0.5, 0.1});
  CHECK(sc.settings.seed == 42);
  CHECK(sc.settings.tol_oracle == 1e-13);
  REQUIRE(sc.suites.size() == 2);
  CHECK(sc.suites[1].kind == SuiteKind::proof);
  CHECK(sc.suites[1].rho == std::vector<double>{0.5, 1.0});
  CHECK(sc.map("sq").monogenic.has_value());
  CHECK(sc.curve("c").curve.closed());
  CHECK(sc.homotopy("h").boundary == "c");
}

TEST_CASE("defaults") {
  const Scenario sc = parse_scenario(kHeader + kBody);
  const Settings defaults;
  CHECK(sc.settings.refinements == defaults.refinements);
  CHECK(sc.settings.s_grid == std::vector<double>{0.5, 0.25, 0.1, 0.05, 0.01});
  CHECK(sc.settings.tol_theorem == 1e-8);
  CHECK(sc.settings.residual_slope_min == 0.9);
  CHECK(sc.settings.residual_slope_max == 1.1);
  CHECK(sc.suites[0].expect == Verdict::pass);
}

TEST_CASE("errors carry line and field") {
  expect_error("name = x\n", 1, "format");
  expect_error("format = cquat-scenario/2\n", 1, "format");
  expect_error(kHeader + "[generators]\na1 = 1\na2 = 1\nb1 = 2\nb2 = 2\n", 3, "a1");
  expect_error(kHeader + "[generators]\na1 = i\n", 3, "a2");
  expect_error(kHeader + "[tolerances]\ntheorem = abc\n", 4, "theorem");
  expect_error(kHeader + "[tolerances]\ntheorem = 1e-8\ntheorem = 1e-9\n", 5, "theorem");
  expect_error(kHeader + "[tolerances]\ntheorme = 1e-8\n", 4, "theorme");
  expect_error(kHeader + "[bogus]\n", 3, "");
  expect_error(kHeader + "[map m]\nside = up\n", 4, "side");
  expect_error(kHeader + "[map m]\nside = right\nF1 = pow x\n", 5, "F1");
  expect_error(kHeader + "[curve c]\nkind = blob\n", 3, "kind");
  expect_error(kHeader + "[curve c]\nkind = segment\nfrom = 0,0,0\nto = 1,0,0\n"
                         "[map m]\nside = right\nF1 = id\n"
                         "[suite s]\nkind = t1\nmaps = m\ncurves = c\n",
               13, "curves");
  expect_error(kHeader + kBody + "\n[suite two]\nkind = t1\nmaps = nope\ncurves = c\n", 25, "maps");
  expect_error(kHeader + kBody + "\n[suite two]\nkind = t7\n", 24, "kind");
  expect_error(kHeader + kBody + "\n[suite two]\nkind = t1\nmaps = sq\ncurves = c\nexpect = maybe\n", 27,
               "expect");
  expect_error(kHeader + "not a key value line\n", 3, "");
}

TEST_CASE("term maps cannot feed Gateaux suites") {
  expect_error(kHeader + R"(
[map conj]
term = e1 poly [0, 1] @ conj_xi1

[curve c]
kind = circle
center = 0, 0, 0
radius = 1

[homotopy h]
boundary = c
target = 0, 0, 0

[suite s]
kind = t2
maps = conj
homotopies = h
)", 18, "maps");
}

TEST_CASE("function specs") {
  CHECK(parse_holomorphic("zero").is_zero());
  CHECK(parse_holomorphic("id")(Complex(2, 1)) == Complex(2, 1));
  CHECK(parse_holomorphic("const 2-i")(5.0) == Complex(2, -1));
  CHECK(parse_holomorphic("pow 3")(2.0) == 8.0);
  CHECK(parse_holomorphic("poly [1, 0, i]")(2.0) == Complex(1, 4));
  CHECK(parse_holomorphic("rational [1] / [-1, 1] poles [1]")(3.0) == 0.5);
  CHECK_THROWS(parse_holomorphic("sin"));
  CHECK_THROWS(parse_holomorphic("poly [1, 2"));
}

TEST_CASE("load_scenario reports missing files") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/file.scn"), ScenarioError);
  CHECK_NOTHROW(load_scenario(CQUAT_SCENARIO_DIR "/default.scn"));
  CHECK_THROWS_AS(load_scenario(CQUAT_SCENARIO_DIR "/degenerate.scn"), ScenarioError);
}
