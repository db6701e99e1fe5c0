#pragma once

#include <cstdint>
#include <random>

#include "cquat/quaternion.hpp"
#include "cquat/space.hpp"

namespace cquat::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  Complex complex(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }
  Quaternion quaternion(double scale = 1.0) {
    return {complex(scale), complex(scale), complex(scale), complex(scale)};
  }
  Point3 point(double scale = 1.0) {
    return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)};
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cquat::testing
