#include "cquat/quaternion.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cquat {

namespace {

// kTable[i][j] = index of e_i * e_j, or -1 for zero.
constexpr int kTable[4][4] = {
    {0, -1, 2, -1},
    {-1, 1, -1, 3},
    {-1, 2, -1, 0},
    {3, -1, 1, -1},
};

constexpr Complex kI{0.0, 1.0};

}  // namespace

Quaternion Quaternion::basis(int k) {
  if (k < 1 || k > 4) {
    throw std::out_of_range("basis index must be in 1..4");
  }
  std::array<Complex, 4> c{};
  c[static_cast<std::size_t>(k - 1)] = 1.0;
  return {c[0], c[1], c[2], c[3]};
}

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.c_[0] + q.c_[0], p.c_[1] + q.c_[1], p.c_[2] + q.c_[2],
          p.c_[3] + q.c_[3]};
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.c_[0] - q.c_[0], p.c_[1] - q.c_[1], p.c_[2] - q.c_[2],
          p.c_[3] - q.c_[3]};
}

Quaternion operator-(const Quaternion& p) {
  return {-p.c_[0], -p.c_[1], -p.c_[2], -p.c_[3]};
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  std::array<Complex, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const int k = kTable[i][j];
      if (k >= 0) r[static_cast<std::size_t>(k)] += p.c_[i] * q.c_[j];
    }
  }
  return {r[0], r[1], r[2], r[3]};
}

Quaternion operator*(Complex s, const Quaternion& q) {
  return {s * q.c_[0], s * q.c_[1], s * q.c_[2], s * q.c_[3]};
}

Quaternion operator*(const Quaternion& q, Complex s) { return s * q; }

Quaternion operator/(const Quaternion& q, double s) {
  return {q.c_[0] / s, q.c_[1] / s, q.c_[2] / s, q.c_[3] / s};
}

Quaternion& Quaternion::operator+=(const Quaternion& q) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += q.c_[k];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& q) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= q.c_[k];
  return *this;
}

int basis_product(std::size_t i, std::size_t j) { return kTable[i][j]; }

Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

Quaternion one() { return Quaternion::one(); }

double norm_e(const Quaternion& q) {
  double sum = 0.0;
  for (const auto& c : q.coefficients()) sum += std::norm(c);
  return std::sqrt(sum);
}

bool is_finite(const Quaternion& q) {
  for (const auto& c : q.coefficients()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  os << '(';
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) os << ", ";
    os << q[k].real() << (q[k].imag() < 0 ? "" : "+") << q[k].imag() << 'i';
  }
  return os << ')';
}

IjkQuaternion operator+(const IjkQuaternion& p, const IjkQuaternion& q) {
  return {p.scalar + q.scalar, p.i + q.i, p.j + q.j, p.k + q.k};
}

IjkQuaternion operator*(Complex s, const IjkQuaternion& q) {
  return {s * q.scalar, s * q.i, s * q.j, s * q.k};
}

IjkQuaternion operator*(const IjkQuaternion& p, const IjkQuaternion& q) {
  return {
      p.scalar * q.scalar - p.i * q.i - p.j * q.j - p.k * q.k,
      p.scalar * q.i + p.i * q.scalar + p.j * q.k - p.k * q.j,
      p.scalar * q.j - p.i * q.k + p.j * q.scalar + p.k * q.i,
      p.scalar * q.k + p.i * q.j - p.j * q.i + p.k * q.scalar,
  };
}

double max_abs_difference(const IjkQuaternion& p, const IjkQuaternion& q) {
  return std::max({std::abs(p.scalar - q.scalar), std::abs(p.i - q.i),
                   std::abs(p.j - q.j), std::abs(p.k - q.k)});
}

const BasisChange& basis_change() {
  static const BasisChange kChange{
      {{
          {0.5, 0.5 * kI, 0.0, 0.0},
          {0.5, -0.5 * kI, 0.0, 0.0},
          {0.0, 0.0, 0.5, 0.5 * kI},
          {0.0, 0.0, -0.5, 0.5 * kI},
      }},
      {{
          {1.0, 1.0, 0.0, 0.0},
          {-kI, kI, 0.0, 0.0},
          {0.0, 0.0, 1.0, -1.0},
          {0.0, 0.0, -kI, -kI},
      }},
  };
  return kChange;
}

IjkQuaternion to_ijk(const Quaternion& q) {
  const auto& change = basis_change();
  IjkQuaternion r{};
  for (std::size_t k = 0; k < 4; ++k) r = r + q[k] * change.e_in_ijk[k];
  return r;
}

Quaternion from_ijk(const IjkQuaternion& q) {
  const auto& e = basis_change().ijk_in_e;
  return q.scalar * e[0] + q.i * e[1] + q.j * e[2] + q.k * e[3];
}

}  // namespace cquat
