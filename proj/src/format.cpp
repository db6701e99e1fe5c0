#include "cquat/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace cquat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_imaginary_coefficient(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_double(s);
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf, end);
}

std::string format_complex(Complex c) {
  const double re = c.real();
  const double im = c.imag();
  if (im == 0.0) return format_double(re);
  std::string imag = format_double(im) + "i";
  if (re == 0.0) return imag;
  if (im > 0.0 || std::isnan(im)) imag.insert(imag.begin(), '+');
  return format_double(re) + imag;
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    throw std::invalid_argument("not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_double(s), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  try {
    if (split == std::string_view::npos) {
      return {0.0, parse_imaginary_coefficient(body)};
    }
    return {parse_double(body.substr(0, split)),
            parse_imaginary_coefficient(body.substr(split))};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed complex literal: '" + std::string(s) + "'");
  }
}

}  // namespace cquat
