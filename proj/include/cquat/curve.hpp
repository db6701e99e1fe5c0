#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cquat/space.hpp"

namespace cquat {

/// Endpoint coincidence tolerance for closed curves.
inline constexpr double kClosureTolerance = 1e-12;

/// A materialized curve: ordered vertices together with the curve parameter
/// of each vertex.
struct Polyline {
  std::vector<Point3> points;
  std::vector<double> params;
  bool closed = false;

  std::size_t segments() const { return points.empty() ? 0 : points.size() - 1; }
};

/// Arclength of the polyline.
double mes(const Polyline& line);

/// A parametric curve t in [0,1] -> R^3, oriented by increasing t.
///
/// Curves are materialized as polylines: `materialize(n)` samples n uniform
/// parameter steps and always keeps the breakpoints (polyline corners,
/// concatenation joints) so that piecewise-smooth curves are followed
/// exactly at their kinks.
class Curve {
 public:
  using Parametrization = std::function<Point3(double)>;

  /// Throws std::invalid_argument if `closed` is set but the endpoints are
  /// farther apart than kClosureTolerance.
  Curve(Parametrization param, bool closed, std::vector<double> breakpoints = {});

  /// Polyline through `vertices`, parametrized by normalized arclength.
  /// With `closed`, the first vertex is appended when the last differs.
  static Curve polyline(std::vector<Point3> vertices, bool closed);
  static Curve segment(Point3 from, Point3 to);
  static Curve constant(Point3 p);
  /// center + cos(2 pi t) u + sin(2 pi t) v.
  static Curve ellipse(Point3 center, Point3 u, Point3 v);
  /// Elliptic arc over turn fractions [turn0, turn1].
  static Curve elliptic_arc(Point3 center, Point3 u, Point3 v, double turn0,
                            double turn1);
  /// Joins a then b, each on half of the parameter interval. The end of a
  /// must meet the start of b.
  static Curve concatenate(const Curve& a, const Curve& b);

  Point3 at(double t) const { return param_(t); }
  bool closed() const { return closed_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  Curve reversed() const;
  /// The sub-arc between parameters t0 and t1, reparametrized over [0,1].
  Curve arc(double t0, double t1) const;

  /// Uniform parameter grid with n steps merged with the breakpoints.
  Polyline materialize(std::size_t n) const;
  /// Samples the curve at the given increasing parameters.
  Polyline materialize_at(std::span<const double> params) const;

 private:
  Parametrization param_;
  bool closed_;
  std::vector<double> breakpoints_;
};

/// Arclength of the curve materialized at resolution n (n >= 1).
double mes(const Curve& curve, std::size_t n);

/// Parameter grid {j/n} merged with `extra`, sorted and deduplicated.
std::vector<double> parameter_grid(std::size_t n, std::span<const double> extra);

/// Points of a curve spaced by equal arclength rho along its polyline.
///
/// points[0..n] lie at arclengths 0, rho, ..., n*rho with n*rho < mes.
/// For open curves the endpoint is appended as one more point. arcs[k] are
/// the lengths between consecutive points, ending with the closing
/// (closed curve) or final (open curve) remainder, which is <= rho.
struct ArclengthSubdivision {
  std::vector<Point3> points;
  std::vector<double> params;
  std::vector<double> arcs;
  std::size_t n = 0;
  double total_length = 0.0;
};

/// Requires 0 < rho < mes/2, otherwise throws std::invalid_argument.
ArclengthSubdivision subdivide_by_arclength(const Polyline& line, double rho);
ArclengthSubdivision subdivide_by_arclength(const Curve& curve, double rho,
                                            std::size_t resolution);

/// A continuous deformation H(s, t) of the boundary curve H(0, .) into the
/// interior point H(1, .).
class HomotopyFamily {
 public:
  using Map = std::function<Point3(double, double)>;

  /// Throws std::invalid_argument if H(1, t) is not constant within
  /// kClosureTolerance. `t_breakpoints` are carried over to level curves.
  HomotopyFamily(Map h, std::vector<double> t_breakpoints = {});

  /// H(s,t) = target + (1-s) R(2 pi twist s) (boundary(t) - target)
  ///          + 4 bulge s (1-s) z_hat, R a rotation about the z axis.
  static HomotopyFamily radial(const Curve& boundary, Point3 target,
                               double twist = 0.0, double bulge = 0.0);

  Point3 at(double s, double t) const { return h_(s, t); }
  Point3 target() const { return h_(1.0, 0.0); }
  bool closed() const { return closed_; }
  const std::vector<double>& t_breakpoints() const { return t_breakpoints_; }

 private:
  Map h_;
  std::vector<double> t_breakpoints_;
  bool closed_;
};

/// gamma^s: t -> H(s, t).
Curve level_curve(const HomotopyFamily& h, double s);
/// Gamma^t: s -> H(s, t).
Curve transversal_curve(const HomotopyFamily& h, double t);

}  // namespace cquat
