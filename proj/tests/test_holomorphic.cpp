#include <cmath>

#include "cquat/format.hpp"
#include "cquat/holomorphic.hpp"
#include "cquat/numerics.hpp"
#include "cquat/scenario.hpp"
#include "doctest.h"

using namespace cquat;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_CASE("polynomials") {
  const auto p = HolomorphicFn::polynomial({1.0, kI, 2.0});
  CHECK(p(2.0) == Complex(9.0, 2.0));
  CHECK(p.derivative()(1.0) == kI + 4.0);
  CHECK(HolomorphicFn::power(3)(kI) == -kI);
  CHECK(HolomorphicFn::power(3).derivative()(2.0) == 12.0);
  CHECK(HolomorphicFn::identity()(Complex(3, -1)) == Complex(3, -1));
  CHECK(HolomorphicFn::zero().is_zero());
  CHECK(HolomorphicFn::constant(5.0).derivative().is_zero());
  CHECK(p.is_entire());
}

TEST_CASE("exponentials") {
  const auto f = HolomorphicFn::exponential(2.0, kI);
  CHECK(std::abs(f(std::acos(-1.0)) + 2.0) <= 1e-15);
  CHECK(std::abs(f.derivative()(0.0) - 2.0 * kI) <= 1e-15);
  CHECK(f.is_entire());
}

TEST_CASE("rational functions and poles") {
  const auto r = HolomorphicFn::rational({1.0}, {-1.0, 1.0}, {1.0});
  CHECK(r(3.0) == 0.5);
  CHECK_FALSE(r.is_entire());
  CHECK(r.poles() == std::vector<Complex>{1.0});
  CHECK(std::abs(r.derivative()(3.0) + 0.25) <= 1e-15);
  CHECK_THROWS_AS(r(1.0), EvaluationError);
  CHECK_THROWS_AS(r(1.0 + 1e-12), EvaluationError);
  try {
    r(1.0);
  } catch (const EvaluationError& e) {
    CHECK(e.argument() == 1.0);
    CHECK_FALSE(e.parameter().has_value());
    CHECK(e.at_parameter(0.25).parameter() == 0.25);
  }
  CHECK_THROWS_AS(HolomorphicFn::rational({1.0}, {}, {}), std::invalid_argument);
}

TEST_CASE("describe round trips through the scenario syntax") {
  for (const auto& f : {HolomorphicFn::zero(), HolomorphicFn::power(2),
                        HolomorphicFn::polynomial({1.0, Complex(0.5, -2)}),
                        HolomorphicFn::exponential(0.25, Complex(-0.4, 1)),
                        HolomorphicFn::rational({1.0}, {-1.0, 1.0}, {1.0})}) {
    const HolomorphicFn back = parse_holomorphic(f.describe());
    CHECK(back.describe() == f.describe());
    CHECK(back(Complex(0.3, -0.2)) == f(Complex(0.3, -0.2)));
  }
  CHECK(HolomorphicFn::power(2).describe() == "poly [0, 0, 1]");
  CHECK(HolomorphicFn::exponential(1.0, Complex(0.5, 0.3)).describe() == "exp 1 0.5+0.3i");
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(parse_double(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_complex({1, -2}) == "1-2i");
  CHECK(format_complex({0, 1}) == "1i");
  CHECK(format_complex({2, 0}) == "2");
  CHECK(parse_complex("i") == kI);
  CHECK(parse_complex("-i") == -kI);
  CHECK(parse_complex("2+i") == Complex(2, 1));
  CHECK(parse_complex("-1e-3-2.5e+1i") == Complex(-1e-3, -25));
  CHECK(parse_complex(format_complex({0.1, -0.7})) == Complex(0.1, -0.7));
  CHECK_THROWS(parse_double("1.0x"));
  CHECK_THROWS(parse_double("inf"));
  CHECK_THROWS(parse_complex("1+"));
}

TEST_CASE("log-log slope") {
  const std::vector<double> x = {1, 2, 4, 8};
  const std::vector<double> y = {1, 0.25, 0.0625, 0.015625};
  CHECK(*loglog_slope(x, y) == doctest::Approx(-2.0));
  CHECK_FALSE(loglog_slope(std::vector<double>{1}, std::vector<double>{1}).has_value());
}
