#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cquat/quaternion.hpp"

namespace cquat {

/// Minimum distance, in the complex plane of the argument, kept from every
/// declared pole.
inline constexpr double kPoleMargin = 1e-9;

/// Raised when a map is evaluated too close to a declared pole. The curve
/// parameter is attached by the integrators when known.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, Complex argument,
                  std::optional<double> parameter = std::nullopt);

  Complex argument() const { return argument_; }
  std::optional<double> parameter() const { return parameter_; }
  EvaluationError at_parameter(double t) const;

 private:
  Complex argument_;
  std::optional<double> parameter_;
};

/// A holomorphic function of one complex variable drawn from a family that is
/// closed under differentiation: polynomials, scale * exp(rate * w), and
/// rationals N/D with an explicit list of poles.
class HolomorphicFn {
 public:
  struct Polynomial {
    std::vector<Complex> coeffs;  // coeffs[k] multiplies w^k
  };
  struct Exponential {
    Complex scale;
    Complex rate;
  };
  struct Rational {
    std::vector<Complex> numerator;
    std::vector<Complex> denominator;
    std::vector<Complex> poles;
  };

  HolomorphicFn() : rep_(Polynomial{}) {}

  static HolomorphicFn zero() { return HolomorphicFn(); }
  static HolomorphicFn constant(Complex c) { return polynomial({c}); }
  static HolomorphicFn identity() { return polynomial({0.0, 1.0}); }
  /// w^n.
  static HolomorphicFn power(unsigned n);
  static HolomorphicFn polynomial(std::vector<Complex> coeffs);
  static HolomorphicFn exponential(Complex scale, Complex rate);
  /// Throws std::invalid_argument on an identically zero denominator.
  static HolomorphicFn rational(std::vector<Complex> numerator,
                                std::vector<Complex> denominator,
                                std::vector<Complex> poles);

  /// Throws EvaluationError within kPoleMargin of a pole.
  Complex operator()(Complex w) const;
  HolomorphicFn derivative() const;

  bool is_zero() const;
  bool is_entire() const { return !std::holds_alternative<Rational>(rep_); }
  const std::vector<Complex>& poles() const;

  const std::variant<Polynomial, Exponential, Rational>& representation() const {
    return rep_;
  }

  /// Round-trippable text form used by the scenario reader.
  std::string describe() const;

 private:
  template <typename T>
  explicit HolomorphicFn(T rep) : rep_(std::move(rep)) {}

  std::variant<Polynomial, Exponential, Rational> rep_;
};

/// Horner evaluation; empty coefficient list evaluates to zero.
Complex evaluate_polynomial(const std::vector<Complex>& coeffs, Complex w);
std::vector<Complex> differentiate_polynomial(const std::vector<Complex>& coeffs);

}  // namespace cquat
