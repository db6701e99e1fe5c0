#include <array>
#include <cmath>

#include "cquat/monogenic.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cquat;

namespace {

constexpr Complex kI{0.0, 1.0};
const GeneratorTriple kGen = GeneratorTriple::standard();

MonogenicMap make(Side side, HolomorphicFn f1, HolomorphicFn f2, HolomorphicFn f3 = {},
                  HolomorphicFn f4 = {}) {
  return MonogenicMap(side, {std::move(f1), std::move(f2), std::move(f3), std::move(f4)}, kGen);
}

const MonogenicMap kIdentity = make(Side::right, HolomorphicFn::identity(), HolomorphicFn::identity());
const MonogenicMap kSquare = make(Side::right, HolomorphicFn::power(2), HolomorphicFn::power(2));

}  // namespace

TEST_CASE("evaluation") {
  testing::Rng rng(4);
  for (int k = 0; k < 10; ++k) {
    const Point3 p = rng.point();
    CHECK(eval(kIdentity, p) == embed(p, kGen));
    const Quaternion z = embed(p, kGen);
    CHECK(norm_e(eval(kSquare, p) - z * z) <= 1e-15);
  }
  CHECK(eval(kSquare, {1, 0, 0}) == one());

  const auto f3 = make(Side::right, {}, {}, HolomorphicFn::identity());
  CHECK(eval(f3, {1, 2, 3}) == Complex(4, 5) * Quaternion::basis(3));
  const auto f4 = make(Side::right, {}, {}, {}, HolomorphicFn::identity());
  CHECK(eval(f4, {1, 2, 3}) == Complex(-2, 7) * Quaternion::basis(4));
}

TEST_CASE("left maps swap the arguments of the e3 and e4 components") {
  const auto left = make(Side::left, {}, {}, HolomorphicFn::identity(), HolomorphicFn::power(2));
  CHECK(left.argument_index(2) == 2);
  CHECK(left.argument_index(3) == 1);
  CHECK(kIdentity.argument_index(2) == 1);
  CHECK(kIdentity.argument_index(3) == 2);
  CHECK(eval(left, {1, 2, 3}) == Complex(-2, 7) * Quaternion::basis(3) +
                                    Complex(4, 5) * Complex(4, 5) * Quaternion::basis(4));
}

TEST_CASE("powers of zeta and their derivatives") {
  testing::Rng rng(6);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto m = make(Side::right, HolomorphicFn::power(n), HolomorphicFn::power(n));
    for (int k = 0; k < 5; ++k) {
      const Point3 p = rng.point();
      const Quaternion z = embed(p, kGen);
      Quaternion zn = one(), znm1 = one();
      for (unsigned j = 0; j < n; ++j) zn = zn * z;
      for (unsigned j = 0; j + 1 < n; ++j) znm1 = znm1 * z;
      CHECK(norm_e(eval(m, p) - zn) <= 1e-12 * (1.0 + norm_e(zn)));
      CHECK(norm_e(derivative(m, p) - Complex(n) * znm1) <= 1e-12 * (1.0 + norm_e(znm1)));
    }
  }
  CHECK(derivative(kIdentity, {0.3, -1, 2}) == one());
  const Point3 p{0.2, 0.4, -0.1};
  CHECK(norm_e(derivative(kSquare, p) - Complex(2) * embed(p, kGen)) <= 1e-15);
  const auto constant = make(Side::left, HolomorphicFn::constant(2.0), HolomorphicFn::constant(kI),
                             HolomorphicFn::constant(1.0), {});
  CHECK(derivative(constant, p) == Quaternion::zero());
  CHECK(kSquare.is_entire());
  CHECK(kSquare.derivative_map().side() == Side::right);
}

TEST_CASE("Gateaux residual") {
  testing::Rng rng(8);
  for (int k = 0; k < 10; ++k) {
    const Point3 p = rng.point(), h = rng.point();
    for (double eps : {0.5, 0.25, 0.1}) {
      CHECK(gateaux_residual(kIdentity, p, h, eps) <= 1e-13);
    }
    // Only the cancellation in the difference quotient remains.
    for (double eps : {1e-3, 1e-6}) {
      CHECK(gateaux_residual(kIdentity, p, h, eps) <= 1e-14 / eps);
    }
  }

  const Point3 p{0.3, -0.2, 0.5}, h{0.6, 0.8, 0.0};
  for (double eps : {1e-2, 1e-3}) {
    const double ratio = gateaux_residual(kSquare, p, h, eps) / gateaux_residual(kSquare, p, h, eps / 2);
    CHECK(ratio == doctest::Approx(2.0).epsilon(0.05));
  }

  const std::vector<double> eps = {1e-2, 1e-3, 1e-4};
  const auto probe = probe_gateaux(kSquare, p, h, eps, Side::right);
  CHECK(probe.vanishes);
  CHECK_FALSE(probe.exact);
  CHECK(probe.slope == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(probe_gateaux(kIdentity, p, h, eps, Side::right).exact);
  CHECK_THROWS_AS(gateaux_residual(kSquare, p, h, 0.0), std::invalid_argument);
}

TEST_CASE("the residual form distinguishes the sides") {
  const std::vector<double> eps = {1e-2, 1e-3, 1e-4};
  const auto right = make(Side::right, HolomorphicFn::power(2), HolomorphicFn::identity(),
                          HolomorphicFn::exponential(1.0, 0.5 * kI), HolomorphicFn::power(2));
  const auto left = make(Side::left, HolomorphicFn::power(2), HolomorphicFn::identity(),
                         HolomorphicFn::exponential(1.0, 0.5 * kI), HolomorphicFn::power(2));
  const Point3 p{0.1, 0.2, -0.3};
  for (const Point3& h : {Point3{0, 1, 0}, Point3{0, 0, 1}, Point3{0.3, -0.5, 0.8}}) {
    CHECK(probe_gateaux(right, p, h, eps, Side::right).vanishes);
    CHECK(probe_gateaux(left, p, h, eps, Side::left).vanishes);
    const auto wrong = probe_gateaux(right, p, h, eps, Side::left);
    CHECK_FALSE(wrong.vanishes);
    CHECK(wrong.residuals.back() > 1e-3);
    CHECK_FALSE(probe_gateaux(left, p, h, eps, Side::right).vanishes);
  }
  // Along i1 both sides agree since i1 is the unit.
  CHECK(probe_gateaux(right, p, {1, 0, 0}, eps, Side::left).vanishes);
}

TEST_CASE("component functions") {
  const Point3 p{1, 2, 3};
  const auto e3 = component_functions(GenericMap::constant(Quaternion::basis(3), kGen));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(e3.u[k](p) == (k == 2 ? 1.0 : 0.0));
    CHECK(e3.v[k](p) == 0.0);
  }
  const auto ie1 = component_functions(GenericMap::constant(kI * Quaternion::basis(1), kGen));
  CHECK(ie1.v[0](p) == 1.0);
  CHECK(ie1.u[0](p) == 0.0);

  const auto id = component_functions(to_generic(kIdentity));
  CHECK(id.u[0](p) == 4.0);
  CHECK(id.v[0](p) == 5.0);
  CHECK(id.u[1](p) == -2.0);
  CHECK(id.v[1](p) == 7.0);
  CHECK(id.recombine(p) == eval(kIdentity, p));
}

TEST_CASE("term-built maps") {
  const auto conj = generic_from_terms({{1, HolomorphicFn::identity(), TermArgument::conj_xi1}}, kGen);
  CHECK(conj({1, 2, 3}) == Complex(4, -5) * Quaternion::basis(1));
  const auto mixed = generic_from_terms({{2, HolomorphicFn::power(2), TermArgument::xi2},
                                         {4, HolomorphicFn::identity(), TermArgument::xi1}},
                                        kGen);
  CHECK(mixed({1, 2, 3}) == Complex(-2, 7) * Complex(-2, 7) * Quaternion::basis(2) +
                                Complex(4, 5) * Quaternion::basis(4));
  CHECK_THROWS_AS(GenericMap([](const Point3&) { return one(); }, {1.0, 1.0, 2.0, 2.0}),
                  std::invalid_argument);
}

TEST_CASE("to_generic matches eval") {
  const auto g = to_generic(kSquare);
  testing::Rng rng(10);
  for (int k = 0; k < 5; ++k) {
    const Point3 p = rng.point();
    CHECK(g(p) == eval(kSquare, p));
  }
}
