#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>

namespace cquat {

using Complex = std::complex<double>;

/// An element of the complex quaternion algebra H(C).
///
/// The canonical representation is the idempotent basis {e1, e2, e3, e4}:
/// e1 and e2 are idempotents with e1 + e2 = 1, and products of basis
/// elements follow a sparse table (see `basis_product`). The classical
/// {1, I, J, K} basis is available as a view through `to_ijk`.
///
/// Values are immutable once constructed.
class Quaternion {
 public:
  constexpr Quaternion() = default;
  constexpr Quaternion(Complex c1, Complex c2, Complex c3, Complex c4)
      : c_{c1, c2, c3, c4} {}

  /// Basis element e_k, k in 1..4.
  static Quaternion basis(int k);
  static constexpr Quaternion zero() { return {}; }
  /// The unit e1 + e2.
  static constexpr Quaternion one() { return {1.0, 1.0, 0.0, 0.0}; }

  /// Coefficient of e_{k+1} (zero-based index).
  constexpr const Complex& operator[](std::size_t k) const { return c_[k]; }
  constexpr const std::array<Complex, 4>& coefficients() const { return c_; }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator-(const Quaternion& p);
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator*(Complex s, const Quaternion& q);
  friend Quaternion operator*(const Quaternion& q, Complex s);
  friend Quaternion operator/(const Quaternion& q, double s);

  Quaternion& operator+=(const Quaternion& q);
  Quaternion& operator-=(const Quaternion& q);

  friend bool operator==(const Quaternion& p, const Quaternion& q) = default;

 private:
  std::array<Complex, 4> c_{};
};

/// Result of e_i * e_j (zero-based indices): the index of the basis element
/// produced, or -1 when the product vanishes.
int basis_product(std::size_t i, std::size_t j);

Quaternion mul(const Quaternion& p, const Quaternion& q);
Quaternion one();

/// Euclidean norm of the eight real coordinates over the e-basis.
double norm_e(const Quaternion& q);

bool is_finite(const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Coefficients over {1, I, J, K} with I^2 = J^2 = K^2 = -1, IJ = K,
/// JK = I, KI = J.
struct IjkQuaternion {
  Complex scalar;
  Complex i;
  Complex j;
  Complex k;

  friend IjkQuaternion operator+(const IjkQuaternion& p,
                                 const IjkQuaternion& q);
  friend IjkQuaternion operator*(Complex s, const IjkQuaternion& q);
  /// Hamilton product with complex coefficients.
  friend IjkQuaternion operator*(const IjkQuaternion& p,
                                 const IjkQuaternion& q);
  friend bool operator==(const IjkQuaternion&, const IjkQuaternion&) = default;
};

double max_abs_difference(const IjkQuaternion& p, const IjkQuaternion& q);

/// Change of basis between {e1..e4} and {1, I, J, K}:
///   e1 = (1 + iI)/2, e2 = (1 - iI)/2, e3 = (J + iK)/2, e4 = (-J + iK)/2.
struct BasisChange {
  std::array<IjkQuaternion, 4> e_in_ijk;  // e_k expressed over {1,I,J,K}
  std::array<Quaternion, 4> ijk_in_e;     // 1, I, J, K expressed over e_k
};

const BasisChange& basis_change();

IjkQuaternion to_ijk(const Quaternion& q);
Quaternion from_ijk(const IjkQuaternion& q);

}  // namespace cquat
