#include <cmath>
#include <numbers>

#include "cquat/curve.hpp"
#include "doctest.h"

using namespace cquat;

namespace {
constexpr double kPi = std::numbers::pi;
const Curve kCircle = Curve::ellipse({0, 0, 0}, {1, 0, 0}, {0, 1, 0});
}  // namespace

TEST_CASE("mes") {
  const Curve seg = Curve::segment({0, 0, 0}, {1, 0, 0});
  for (std::size_t n : {1, 2, 7, 1000}) CHECK(mes(seg, n) == 1.0);
  CHECK(mes(kCircle, 10000) == doctest::Approx(2 * kPi).epsilon(1e-6));
  CHECK(std::abs(mes(kCircle, 10000) - 2 * kPi) <= 1e-6);
  CHECK(mes(Curve::constant({1, 2, 3}), 50) == 0.0);
  // Inscribed polygons increase toward the arclength.
  CHECK(mes(kCircle, 64) < mes(kCircle, 128));
  CHECK(mes(kCircle, 128) < 2 * kPi);
}

TEST_CASE("closure") {
  CHECK(kCircle.closed());
  CHECK_FALSE(Curve::segment({0, 0, 0}, {1, 0, 0}).closed());
  CHECK_THROWS_AS(Curve([](double t) { return Point3{t, 0, 0}; }, true), std::invalid_argument);

  const Polyline line = kCircle.materialize(10);
  CHECK(line.points.size() == 11);
  CHECK(line.points.front() == line.points.back());
  CHECK(line.segments() == 10);
}

TEST_CASE("polyline curves keep their corners") {
  const Curve square = Curve::polyline({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, true);
  CHECK(square.closed());
  CHECK(square.breakpoints().size() == 3);
  for (std::size_t n : {1, 3, 5, 17}) {
    CHECK(mes(square, n) == doctest::Approx(4.0).epsilon(1e-15));
  }
  CHECK(square.at(0.25) == Point3{1, 0, 0});
  const Polyline coarse = square.materialize(1);
  CHECK(coarse.points.size() == 5);
}

TEST_CASE("orientation and sub-arcs") {
  const Curve rev = kCircle.reversed();
  CHECK(rev.at(0.25).x == doctest::Approx(0.0));
  CHECK(rev.at(0.25).y == doctest::Approx(-1.0));
  const Curve half = kCircle.arc(0.0, 0.5);
  CHECK_FALSE(half.closed());
  CHECK(mes(half, 5000) == doctest::Approx(kPi).epsilon(1e-6));
}

TEST_CASE("concatenation") {
  const Curve upper = Curve::elliptic_arc({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 0.0, 0.5);
  const Curve lower = Curve::elliptic_arc({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, 0.5, 1.0);
  const Curve joined = Curve::concatenate(upper, lower);
  CHECK(joined.closed());
  CHECK(joined.breakpoints() == std::vector<double>{0.5});
  CHECK(mes(joined, 10000) == doctest::Approx(mes(upper, 5000) + mes(lower, 5000)).epsilon(1e-12));
  CHECK_THROWS_AS(Curve::concatenate(upper, upper), std::invalid_argument);
}

TEST_CASE("parameter grid") {
  const std::vector<double> extra = {0.3, 0.5, 0.5 + 1e-16};
  const auto grid = parameter_grid(4, extra);
  CHECK(grid == std::vector<double>{0.0, 0.25, 0.3, 0.5, 0.75, 1.0});
}

TEST_CASE("subdivision by arclength") {
  SUBCASE("segment") {
    const Polyline seg = Curve::segment({0, 0, 0}, {1, 0, 0}).materialize(1);
    const auto sub = subdivide_by_arclength(seg, 0.3);
    CHECK(sub.n == 3);
    REQUIRE(sub.points.size() == 5);
    const double expected[] = {0.0, 0.3, 0.6, 0.9, 1.0};
    for (std::size_t k = 0; k < 5; ++k) CHECK(sub.points[k].x == doctest::Approx(expected[k]));
    CHECK(sub.arcs.back() == doctest::Approx(0.1));
  }
  SUBCASE("circle with rho = pi/2") {
    const auto sub = subdivide_by_arclength(kCircle, kPi / 2, 4096);
    // The inscribed polygon is slightly shorter than 2 pi, so the fourth arc
    // is the closing remainder.
    REQUIRE(sub.arcs.size() == 4);
    for (double a : sub.arcs) CHECK(a == doctest::Approx(kPi / 2).epsilon(1e-6));
    CHECK(sub.arcs.back() <= kPi / 2);
    CHECK(sub.points[1].y == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("count bounds") {
    for (double rho : {0.1, 0.7, 1.3, 3.1}) {
      const auto sub = subdivide_by_arclength(kCircle, rho, 2048);
      CHECK(sub.n + 1 >= 2);
      CHECK(sub.n <= static_cast<std::size_t>(std::floor(sub.total_length / rho)) + 1);
      CHECK(sub.arcs.back() <= rho);
      CHECK(sub.arcs.back() > 0.0);
    }
  }
  SUBCASE("rho out of range") {
    CHECK_THROWS_AS(subdivide_by_arclength(kCircle, kPi, 1024), std::invalid_argument);
    CHECK_THROWS_AS(subdivide_by_arclength(kCircle, 0.0, 1024), std::invalid_argument);
    CHECK_THROWS_AS(subdivide_by_arclength(kCircle, -1.0, 1024), std::invalid_argument);
  }
}

TEST_CASE("homotopy families") {
  const auto h = HomotopyFamily::radial(kCircle, {0, 0, 0}, 0.0, 0.0);
  CHECK(h.closed());
  const Curve end = level_curve(h, 1.0);
  CHECK(mes(end, 100) == 0.0);
  for (double t : {0.0, 0.3, 0.9}) {
    CHECK(level_curve(h, 0.0).at(t) == kCircle.at(t));
  }
  for (double s : {0.5, 0.25, 0.1, 0.05, 0.01}) {
    CHECK(mes(level_curve(h, s), 4096) == doctest::Approx((1 - s) * mes(kCircle, 4096)).epsilon(1e-12));
  }
  const Curve tr = transversal_curve(h, 0.0);
  CHECK_FALSE(tr.closed());
  CHECK(mes(tr, 10) == doctest::Approx(1.0));

  const auto twisted = HomotopyFamily::radial(kCircle, {0, 0, 0.5}, 0.5, 0.3);
  CHECK(twisted.at(1.0, 0.7) == Point3{0, 0, 0.5});
  CHECK(distance(twisted.at(0.0, 0.2), kCircle.at(0.2)) <= 1e-15);

  CHECK_THROWS_AS(HomotopyFamily([](double s, double t) { return Point3{s * t, 0, 0}; }),
                  std::invalid_argument);
}
