#include "cquat/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace cquat {

std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("loglog_slope: size mismatch");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2) return std::nullopt;
  const double dm = static_cast<double>(m);
  const double den = dm * sxx - sx * sx;
  if (den == 0.0) return std::nullopt;
  return (dm * sxy - sx * sy) / den;
}

}  // namespace cquat
