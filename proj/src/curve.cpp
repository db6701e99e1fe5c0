#include "cquat/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cquat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kParamMergeTolerance = 1e-14;

std::vector<double> interior_sorted(std::vector<double> values) {
  std::erase_if(values, [](double t) { return !(t > 0.0 && t < 1.0); });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace

double mes(const Polyline& line) {
  double length = 0.0;
  for (std::size_t j = 0; j + 1 < line.points.size(); ++j) {
    length += distance(line.points[j + 1], line.points[j]);
  }
  return length;
}

Curve::Curve(Parametrization param, bool closed, std::vector<double> breakpoints)
    : param_(std::move(param)),
      closed_(closed),
      breakpoints_(interior_sorted(std::move(breakpoints))) {
  if (!param_) throw std::invalid_argument("curve parametrization is empty");
  if (closed_) {
    const double gap = distance(param_(0.0), param_(1.0));
    if (!(gap <= kClosureTolerance)) {
      throw std::invalid_argument("curve declared closed but endpoints are " +
                                  std::to_string(gap) + " apart");
    }
  }
}

Curve Curve::polyline(std::vector<Point3> vertices, bool closed) {
  if (vertices.empty()) throw std::invalid_argument("polyline has no vertices");
  if (closed && vertices.back() != vertices.front()) {
    vertices.push_back(vertices.front());
  }
  std::vector<double> cumulative(vertices.size(), 0.0);
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    cumulative[j] = cumulative[j - 1] + distance(vertices[j], vertices[j - 1]);
  }
  const double total = cumulative.back();
  std::vector<double> breakpoints;
  if (total > 0.0) {
    for (std::size_t j = 1; j + 1 < vertices.size(); ++j) {
      breakpoints.push_back(cumulative[j] / total);
    }
  }
  auto param = [vertices, cumulative, total](double t) -> Point3 {
    if (total == 0.0 || t <= 0.0) return vertices.front();
    if (t >= 1.0) return vertices.back();
    const double s = t * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
    const auto j = static_cast<std::size_t>(it - cumulative.begin()) - 1;
    if (j + 1 >= vertices.size()) return vertices.back();
    const double len = cumulative[j + 1] - cumulative[j];
    const double f = len > 0.0 ? (s - cumulative[j]) / len : 0.0;
    return vertices[j] + f * (vertices[j + 1] - vertices[j]);
  };
  return Curve(std::move(param), closed, std::move(breakpoints));
}

Curve Curve::segment(Point3 from, Point3 to) {
  return Curve(
      [from, to](double t) { return t >= 1.0 ? to : from + t * (to - from); },
      false);
}

Curve Curve::constant(Point3 p) {
  return Curve([p](double) { return p; }, true);
}

Curve Curve::ellipse(Point3 center, Point3 u, Point3 v) {
  return Curve(
      [center, u, v](double t) {
        if (t >= 1.0) t = 0.0;
        const double a = kTwoPi * t;
        return center + std::cos(a) * u + std::sin(a) * v;
      },
      true);
}

Curve Curve::elliptic_arc(Point3 center, Point3 u, Point3 v, double turn0,
                          double turn1) {
  return Curve(
      [center, u, v, turn0, turn1](double t) {
        const double a = kTwoPi * (t >= 1.0 ? turn1 : turn0 + t * (turn1 - turn0));
        return center + std::cos(a) * u + std::sin(a) * v;
      },
      false);
}

Curve Curve::concatenate(const Curve& a, const Curve& b) {
  const double gap = distance(a.at(1.0), b.at(0.0));
  if (!(gap <= kClosureTolerance)) {
    throw std::invalid_argument("concatenated arcs do not meet (gap " +
                                std::to_string(gap) + ")");
  }
  std::vector<double> breakpoints;
  for (double t : a.breakpoints()) breakpoints.push_back(0.5 * t);
  breakpoints.push_back(0.5);
  for (double t : b.breakpoints()) breakpoints.push_back(0.5 + 0.5 * t);
  const bool closed = distance(a.at(0.0), b.at(1.0)) <= kClosureTolerance;
  return Curve(
      [a, b](double t) {
        return t <= 0.5 ? a.at(2.0 * t) : b.at(t >= 1.0 ? 1.0 : 2.0 * t - 1.0);
      },
      closed, std::move(breakpoints));
}

Curve Curve::reversed() const {
  std::vector<double> breakpoints;
  for (double t : breakpoints_) breakpoints.push_back(1.0 - t);
  return Curve([param = param_](double t) { return param(1.0 - t); }, closed_,
               std::move(breakpoints));
}

Curve Curve::arc(double t0, double t1) const {
  std::vector<double> breakpoints;
  for (double t : breakpoints_) {
    const double u = (t - t0) / (t1 - t0);
    if (u > 0.0 && u < 1.0) breakpoints.push_back(u);
  }
  const bool closed = distance(at(t0), at(t1)) <= kClosureTolerance;
  return Curve(
      [param = param_, t0, t1](double u) {
        return param(u >= 1.0 ? t1 : t0 + u * (t1 - t0));
      },
      closed, std::move(breakpoints));
}

std::vector<double> parameter_grid(std::size_t n, std::span<const double> extra) {
  if (n == 0) throw std::invalid_argument("resolution must be at least 1");
  std::vector<double> grid;
  grid.reserve(n + 1 + extra.size());
  for (std::size_t j = 0; j <= n; ++j) {
    grid.push_back(static_cast<double>(j) / static_cast<double>(n));
  }
  for (double t : extra) {
    if (t > 0.0 && t < 1.0) grid.push_back(t);
  }
  std::sort(grid.begin(), grid.end());
  std::vector<double> merged;
  merged.reserve(grid.size());
  for (double t : grid) {
    if (merged.empty() || t - merged.back() > kParamMergeTolerance) {
      merged.push_back(t);
    } else if (t == 1.0) {
      merged.back() = 1.0;
    }
  }
  return merged;
}

Polyline Curve::materialize(std::size_t n) const {
  const auto grid = parameter_grid(n, breakpoints_);
  return materialize_at(grid);
}

Polyline Curve::materialize_at(std::span<const double> params) const {
  Polyline line;
  line.closed = closed_;
  line.params.assign(params.begin(), params.end());
  line.points.reserve(params.size());
  for (double t : params) line.points.push_back(param_(t));
  if (closed_ && line.points.size() > 1 && params.front() == 0.0 &&
      params.back() == 1.0) {
    line.points.back() = line.points.front();
  }
  return line;
}

double mes(const Curve& curve, std::size_t n) {
  return mes(curve.materialize(n));
}

ArclengthSubdivision subdivide_by_arclength(const Polyline& line, double rho) {
  const double total = mes(line);
  if (!(rho > 0.0 && rho < 0.5 * total)) {
    throw std::invalid_argument("rho must lie in (0, mes/2) = (0, " +
                                std::to_string(0.5 * total) + "), got " +
                                std::to_string(rho));
  }
  std::vector<double> cumulative(line.points.size(), 0.0);
  for (std::size_t j = 1; j < line.points.size(); ++j) {
    cumulative[j] = cumulative[j - 1] + distance(line.points[j], line.points[j - 1]);
  }

  auto n = static_cast<std::size_t>(std::floor(total / rho));
  while (n > 0 && static_cast<double>(n) * rho >= total) --n;
  while (static_cast<double>(n + 1) * rho < total) ++n;

  ArclengthSubdivision out;
  out.n = n;
  out.total_length = total;
  std::size_t seg = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double s = static_cast<double>(k) * rho;
    while (seg + 2 < cumulative.size() && cumulative[seg + 1] <= s) ++seg;
    const double len = cumulative[seg + 1] - cumulative[seg];
    const double f = len > 0.0 ? std::clamp((s - cumulative[seg]) / len, 0.0, 1.0) : 0.0;
    const Point3& a = line.points[seg];
    const Point3& b = line.points[seg + 1];
    out.points.push_back(a + f * (b - a));
    if (!line.params.empty()) {
      out.params.push_back(line.params[seg] +
                           f * (line.params[seg + 1] - line.params[seg]));
    }
    if (k > 0) out.arcs.push_back(rho);
  }
  out.arcs.push_back(total - static_cast<double>(n) * rho);
  if (!line.closed) {
    out.points.push_back(line.points.back());
    if (!line.params.empty()) out.params.push_back(line.params.back());
  }
  return out;
}

ArclengthSubdivision subdivide_by_arclength(const Curve& curve, double rho,
                                            std::size_t resolution) {
  return subdivide_by_arclength(curve.materialize(resolution), rho);
}

HomotopyFamily::HomotopyFamily(Map h, std::vector<double> t_breakpoints)
    : h_(std::move(h)), t_breakpoints_(interior_sorted(std::move(t_breakpoints))) {
  if (!h_) throw std::invalid_argument("homotopy map is empty");
  const Point3 target = h_(1.0, 0.0);
  constexpr int kSamples = 64;
  for (int j = 1; j <= kSamples; ++j) {
    const double t = static_cast<double>(j) / kSamples;
    const double gap = distance(h_(1.0, t), target);
    if (!(gap <= kClosureTolerance)) {
      throw std::invalid_argument("homotopy H(1, t) is not constant (deviation " +
                                  std::to_string(gap) + " at t = " +
                                  std::to_string(t) + ")");
    }
  }
  closed_ = distance(h_(0.0, 0.0), h_(0.0, 1.0)) <= kClosureTolerance;
}

HomotopyFamily HomotopyFamily::radial(const Curve& boundary, Point3 target,
                                      double twist, double bulge) {
  auto h = [boundary, target, twist, bulge](double s, double t) {
    const Point3 d = boundary.at(t) - target;
    const double angle = kTwoPi * twist * s;
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    const Point3 rotated{c * d.x - sn * d.y, sn * d.x + c * d.y, d.z};
    const Point3 lift{0.0, 0.0, 4.0 * bulge * s * (1.0 - s)};
    return target + (1.0 - s) * rotated + lift;
  };
  return HomotopyFamily(std::move(h), boundary.breakpoints());
}

Curve level_curve(const HomotopyFamily& h, double s) {
  return Curve([h, s](double t) { return h.at(s, t); }, h.closed(),
               h.t_breakpoints());
}

Curve transversal_curve(const HomotopyFamily& h, double t) {
  return Curve([h, t](double s) { return h.at(s, t); }, false);
}

}  // namespace cquat
