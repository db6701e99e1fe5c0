#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cquat/curve.hpp"
#include "cquat/monogenic.hpp"

namespace cquat {

/// Sample placement inside each segment.
enum class Rule { left_endpoint, trapezoid };

std::string_view to_string(Rule rule);

struct QuadratureSpec {
  Rule rule = Rule::trapezoid;
  std::size_t n = 256;
  /// When non-empty, integrals run over the whole schedule and report the
  /// last entry; otherwise they run at n (and n/2 for the error estimate).
  std::vector<std::size_t> schedule;

  /// Throws std::invalid_argument unless n >= 2 and the schedule is strictly
  /// increasing with entries >= 2.
  void validate() const;
};

struct IntegralResult {
  Quaternion value;
  std::size_t n = 0;
  /// norm_e of the difference between the last two refinements.
  double error_estimate = 0.0;
};

/// Discrete curvilinear integral over a polyline:
///   right: sum_j dzeta_j * Psi(zeta_j*),   left: sum_j Psi(zeta_j*) * dzeta_j
/// with dzeta_j the E3 image of the vertex increment. Map evaluation may run
/// on several threads; partial sums are always combined in segment order.
Quaternion integrate_polyline(const Polyline& line, const GenericMap& g, Side side,
                              Rule rule = Rule::trapezoid);

/// Same discretization, assembled from the real one-dimensional sums of
/// U_k and V_k against dx, dy and dz and recombined with e_k, i2 e_k, i3 e_k
/// (right) or e_k, e_k i2, e_k i3 (left).
Quaternion integrate_polyline_componentwise(const Polyline& line, const GenericMap& g,
                                            Side side, Rule rule = Rule::trapezoid);

IntegralResult integrate(const Curve& curve, const GenericMap& g, Side side,
                         const QuadratureSpec& q);
inline IntegralResult integrate_right(const Curve& curve, const GenericMap& g,
                                      const QuadratureSpec& q) {
  return integrate(curve, g, Side::right, q);
}
inline IntegralResult integrate_left(const Curve& curve, const GenericMap& g,
                                     const QuadratureSpec& q) {
  return integrate(curve, g, Side::left, q);
}

IntegralResult integrate_componentwise_oracle(const Curve& curve, const GenericMap& g,
                                              const QuadratureSpec& q, Side side);

struct RefinementRow {
  std::size_t n = 0;
  Quaternion value;
  double norm = 0.0;
  /// Change from the previous row; the first row compares against n/2.
  double delta = 0.0;
};

struct Refinement {
  IntegralResult result;
  bool converged = false;
  std::vector<RefinementRow> table;
};

/// Walks the schedule until two successive values differ by less than tol.
/// Non-convergence is reported through `converged`, not thrown.
Refinement refine_until(const Curve& curve, const GenericMap& g, Side side, double tol,
                        std::span<const std::size_t> schedule,
                        Rule rule = Rule::trapezoid);

/// Powers of two 2^lo .. 2^hi.
std::vector<std::size_t> doubling_schedule(unsigned lo, unsigned hi);

}  // namespace cquat
