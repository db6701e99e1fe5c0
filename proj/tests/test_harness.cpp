#include <cmath>
#include <numbers>

#include "cquat/harness.hpp"
#include "doctest.h"

using namespace cquat;

namespace {

const GeneratorTriple kGen = GeneratorTriple::standard();
const Curve kCircle = Curve::ellipse({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
const HomotopyFamily kCone = HomotopyFamily::radial(kCircle, {0, 0, 0.5}, 0.0, 0.0);

MonogenicMap square_map(Side side) {
  return MonogenicMap(side, {HolomorphicFn::power(2), HolomorphicFn::power(2), {}, {}}, kGen);
}

Settings quick() {
  Settings s;
  s.refinements = doubling_schedule(5, 14);
  return s;
}

}  // namespace

TEST_CASE("probe directions") {
  const auto dirs = probe_directions(10, 0);
  REQUIRE(dirs.size() == 13);
  CHECK(dirs[0] == Point3{1, 0, 0});
  CHECK(dirs[2] == Point3{0, 0, 1});
  for (const auto& d : dirs) CHECK(norm(d) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(probe_directions(10, 0)[7] == dirs[7]);
  CHECK_FALSE(probe_directions(10, 1)[7] == dirs[7]);
}

TEST_CASE("closed-curve check") {
  const auto pass = check_closed_curve(kCircle, to_generic(square_map(Side::right)), Side::right, quick());
  CHECK(pass.verdict == Verdict::pass);
  CHECK_FALSE(pass.slope.has_value());

  const Curve square = Curve::polyline({{-0.5, -0.5, 0}, {0.5, -0.5, 0}, {0.5, 0.5, 0}, {-0.5, 0.5, 0}}, true);
  const MonogenicMap cube(Side::right, {HolomorphicFn::power(3), HolomorphicFn::power(3), {}, {}}, kGen);
  Settings s;
  const auto resolved = check_closed_curve(square, to_generic(cube), Side::right, s);
  CHECK(resolved.verdict == Verdict::pass);
  REQUIRE(resolved.slope.has_value());
  CHECK(*resolved.slope == doctest::Approx(2.0).epsilon(0.05));

  const auto conj = generic_from_terms({{1, HolomorphicFn::identity(), TermArgument::conj_xi1}}, kGen);
  const auto control = check_closed_curve(kCircle, conj, Side::right, quick());
  CHECK(control.verdict == Verdict::fail);
  CHECK(norm_e(control.refinement.result.value) > 6.0);
}

TEST_CASE("boundary check on the cone") {
  const auto check = check_boundary_curve(kCone, square_map(Side::right), Side::right, quick());
  CHECK(check.verdict == Verdict::pass);
  CHECK(check.hypotheses_ok);
  CHECK(check.gateaux.ok);
  CHECK(check.gateaux.probes == 5 * 2 * 13);
  // Level curves are circles of radius 1 - s.
  REQUIRE(check.levels.size() == 6);
  for (std::size_t k = 0; k < check.levels.size(); ++k) {
    const double s = check.levels[k];
    CHECK(check.level_mes_refined[k] == doctest::Approx(2 * std::numbers::pi * (1 - s)).epsilon(1e-5));
  }
  CHECK(std::isfinite(check.sup_level_mes));
  CHECK(check.diffs_monotone);

  const auto left = check_boundary_curve(kCone, square_map(Side::left), Side::left, quick());
  CHECK(left.verdict == Verdict::pass);

  const MonogenicMap wrong(Side::right, {HolomorphicFn::identity(), HolomorphicFn::identity(),
                                         HolomorphicFn::exponential(1.0, {0.0, 0.5}), {}},
                           kGen);
  const auto cross = check_boundary_curve(kCone, wrong, Side::left, quick());
  CHECK(cross.verdict == Verdict::fail);
  CHECK_FALSE(cross.gateaux.ok);

  const MonogenicMap pole(Side::right, {HolomorphicFn::rational({1.0}, {-1.0, 1.0}, {1.0}),
                                        HolomorphicFn::power(2), {}, {}},
                          kGen);
  const auto bad = check_boundary_curve(kCone, pole, Side::right, quick());
  CHECK(bad.verdict == Verdict::inconclusive);
  CHECK(bad.reason.find("pole") != std::string::npos);
}

TEST_CASE("degenerate level curve integrates to zero") {
  const Polyline point = level_curve(kCone, 1.0).materialize(64);
  CHECK(integrate_polyline(point, to_generic(square_map(Side::right)), Side::right) == Quaternion::zero());
}

TEST_CASE("loop decomposition") {
  const Settings s;
  const auto g = to_generic(square_map(Side::right));
  const auto d = decompose_into_loops(kCone, g, Side::right, 0.1, 0.5, s);
  CHECK(d.cancellation_residual <= 1e-10);
  CHECK(d.n_within_bounds);
  CHECK(d.n == 12);
  CHECK(d.loop_norms.size() == d.n + 1);
  CHECK(d.bound_factor == doctest::Approx(1 + d.max_transversal_mes / 0.5));
  CHECK(d.level_mes == doctest::Approx(0.9 * d.boundary_mes).epsilon(1e-5));

  CHECK_THROWS_AS(decompose_into_loops(kCone, g, Side::right, 0.1, 4.0, s), std::invalid_argument);
  CHECK_THROWS_AS(decompose_into_loops(kCone, g, Side::right, 0.0, 0.5, s), std::invalid_argument);

  // A non-monogenic map still satisfies the chain identity.
  const auto conj = generic_from_terms({{1, HolomorphicFn::identity(), TermArgument::conj_xi1}}, kGen);
  const auto c = decompose_into_loops(kCone, conj, Side::right, 0.25, 0.7, s);
  CHECK(c.cancellation_residual <= 1e-10);
  CHECK(c.max_loop_norm > 1e-3);
}

TEST_CASE("report exit codes follow expectations") {
  const Scenario sc = load_scenario(CQUAT_SCENARIO_DIR "/negative_expect_pass.scn");
  const Report r = run_scenario(sc);
  REQUIRE(r.suites.size() == 1);
  CHECK(r.suites[0].verdict == Verdict::fail);
  CHECK(r.exit_code() == 1);

  Report expected_fail = r;
  expected_fail.suites[0].expect = Verdict::fail;
  CHECK(expected_fail.exit_code() == 0);

  Report inconclusive = r;
  inconclusive.suites[0].verdict = Verdict::inconclusive;
  CHECK(inconclusive.exit_code() == 2);

  const std::string text = write_report(r);
  CHECK(text.starts_with("format = cquat-report/1\n"));
  CHECK(text.find("wall_ms = ") != std::string::npos);
  CHECK(numeric_payload(text).find("wall_ms") == std::string::npos);
  CHECK(write_report(r, false) == numeric_payload(text));
}
