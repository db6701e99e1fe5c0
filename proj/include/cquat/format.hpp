#pragma once

#include <string>
#include <string_view>

#include "cquat/quaternion.hpp"

namespace cquat {

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

/// "a", "bi", "a+bi" or "a-bi" with shortest round-trip parts.
std::string format_complex(Complex c);

/// Inverse of format_complex; also accepts "i", "-i", "2+i" and surrounding
/// whitespace. Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

/// Throws std::invalid_argument unless the whole token is a finite number.
double parse_double(std::string_view text);

}  // namespace cquat
