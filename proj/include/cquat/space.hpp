#pragma once

#include <cmath>

#include "cquat/quaternion.hpp"

namespace cquat {

/// A point (x, y, z) of R^3, identified with x*i1 + y*i2 + z*i3 in E3.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Point3 operator+(Point3 a, Point3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Point3 operator-(Point3 a, Point3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Point3 operator*(double s, Point3 a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend constexpr bool operator==(Point3, Point3) = default;
};

inline double norm(Point3 p) { return std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }

/// Complex parameters of the generators i2 = a1 e1 + a2 e2 and
/// i3 = b1 e1 + b2 e2 (i1 = e1 + e2 is fixed).
struct GeneratorTriple {
  Complex a1;
  Complex a2;
  Complex b1;
  Complex b2;

  /// a1 = i, a2 = 2i, b1 = 1 + i, b2 = -1 + i.
  static GeneratorTriple standard();

  Quaternion i1() const { return Quaternion::one(); }
  Quaternion i2() const { return {a1, a2, 0.0, 0.0}; }
  Quaternion i3() const { return {b1, b2, 0.0, 0.0}; }
};

/// Smallest singular value below which the generators count as dependent.
inline constexpr double kIndependenceThreshold = 1e-10;

struct IndependenceCheck {
  bool independent = false;
  double smallest_singular_value = 0.0;
};

/// Linear independence of i1, i2, i3 over R, decided on the 4x3 real
/// matrix (x, y, z) -> (Re xi1, Im xi1, Re xi2, Im xi2).
IndependenceCheck check_independence(const GeneratorTriple& gen);

/// Throws std::invalid_argument when the generators are dependent.
void require_independent(const GeneratorTriple& gen);

/// Smallest c with norm_e(embed(p)) <= c * |p| for every p: the spectral
/// norm of the 4x3 real matrix above. Rejects dependent generators.
double component_bound_constant(const GeneratorTriple& gen);

/// The two complex coordinates of zeta in the e1, e2 directions:
/// xi_k = x + a_k y + b_k z.
struct XiCoordinates {
  Complex xi1;
  Complex xi2;
};

inline XiCoordinates xi_coordinates(Point3 p, const GeneratorTriple& gen) {
  return {p.x + gen.a1 * p.y + gen.b1 * p.z, p.x + gen.a2 * p.y + gen.b2 * p.z};
}

/// zeta = x i1 + y i2 + z i3 = xi1 e1 + xi2 e2.
inline Quaternion embed(Point3 p, const GeneratorTriple& gen) {
  const auto [xi1, xi2] = xi_coordinates(p, gen);
  return {xi1, xi2, 0.0, 0.0};
}

}  // namespace cquat
