#pragma once

#include <optional>
#include <span>

namespace cquat {

/// Least-squares slope of log(y) against log(x). Points with non-positive
/// coordinates are skipped; nullopt when fewer than two remain.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace cquat
