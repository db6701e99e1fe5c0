#include "cquat/holomorphic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cquat/format.hpp"

namespace cquat {

namespace {

std::vector<Complex> trimmed(std::vector<Complex> c) {
  while (!c.empty() && c.back() == Complex{}) c.pop_back();
  return c;
}

std::vector<Complex> multiply(const std::vector<Complex>& a,
                              const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<Complex> subtract(std::vector<Complex> a, const std::vector<Complex>& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return trimmed(std::move(a));
}

void write_list(std::ostream& os, const std::vector<Complex>& values) {
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << format_complex(values[i]);
  }
  os << ']';
}

}  // namespace

EvaluationError::EvaluationError(const std::string& what, Complex argument,
                                 std::optional<double> parameter)
    : std::runtime_error(what), argument_(argument), parameter_(parameter) {}

EvaluationError EvaluationError::at_parameter(double t) const {
  return EvaluationError(std::string(what()) + " at curve parameter t = " +
                             format_double(t),
                         argument_, t);
}

Complex evaluate_polynomial(const std::vector<Complex>& coeffs, Complex w) {
  Complex r{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * w + *it;
  return r;
}

std::vector<Complex> differentiate_polynomial(const std::vector<Complex>& coeffs) {
  if (coeffs.size() <= 1) return {};
  std::vector<Complex> d(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs[k];
  }
  return d;
}

HolomorphicFn HolomorphicFn::power(unsigned n) {
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  return polynomial(std::move(c));
}

HolomorphicFn HolomorphicFn::polynomial(std::vector<Complex> coeffs) {
  return HolomorphicFn(Polynomial{trimmed(std::move(coeffs))});
}

HolomorphicFn HolomorphicFn::exponential(Complex scale, Complex rate) {
  if (scale == Complex{}) return zero();
  return HolomorphicFn(Exponential{scale, rate});
}

HolomorphicFn HolomorphicFn::rational(std::vector<Complex> numerator,
                                      std::vector<Complex> denominator,
                                      std::vector<Complex> poles) {
  denominator = trimmed(std::move(denominator));
  if (denominator.empty()) {
    throw std::invalid_argument("rational function has a zero denominator");
  }
  return HolomorphicFn(
      Rational{trimmed(std::move(numerator)), std::move(denominator), std::move(poles)});
}

Complex HolomorphicFn::operator()(Complex w) const {
  return std::visit(
      [w](const auto& f) -> Complex {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return evaluate_polynomial(f.coeffs, w);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return f.scale * std::exp(f.rate * w);
        } else {
          for (const Complex& p : f.poles) {
            if (std::abs(w - p) < kPoleMargin) {
              throw EvaluationError("argument " + format_complex(w) +
                                        " is within the pole margin of " +
                                        format_complex(p),
                                    w);
            }
          }
          const Complex den = evaluate_polynomial(f.denominator, w);
          if (den == Complex{}) {
            throw EvaluationError("denominator vanishes at undeclared pole " +
                                      format_complex(w),
                                  w);
          }
          return evaluate_polynomial(f.numerator, w) / den;
        }
      },
      rep_);
}

HolomorphicFn HolomorphicFn::derivative() const {
  return std::visit(
      [](const auto& f) -> HolomorphicFn {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          return polynomial(differentiate_polynomial(f.coeffs));
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return exponential(f.scale * f.rate, f.rate);
        } else {
          // (N/D)' = (N'D - ND') / D^2, same poles.
          auto num = subtract(multiply(differentiate_polynomial(f.numerator), f.denominator),
                              multiply(f.numerator, differentiate_polynomial(f.denominator)));
          return rational(std::move(num), multiply(f.denominator, f.denominator), f.poles);
        }
      },
      rep_);
}

bool HolomorphicFn::is_zero() const {
  if (const auto* p = std::get_if<Polynomial>(&rep_)) return p->coeffs.empty();
  if (const auto* r = std::get_if<Rational>(&rep_)) return r->numerator.empty();
  return false;
}

const std::vector<Complex>& HolomorphicFn::poles() const {
  static const std::vector<Complex> kNone;
  if (const auto* r = std::get_if<Rational>(&rep_)) return r->poles;
  return kNone;
}

std::string HolomorphicFn::describe() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Polynomial>) {
          if (f.coeffs.empty()) {
            os << "zero";
          } else {
            os << "poly ";
            write_list(os, f.coeffs);
          }
        } else if constexpr (std::is_same_v<T, Exponential>) {
          os << "exp " << format_complex(f.scale) << ' ' << format_complex(f.rate);
        } else {
          os << "rational ";
          write_list(os, f.numerator);
          os << " / ";
          write_list(os, f.denominator);
          os << " poles ";
          write_list(os, f.poles);
        }
      },
      rep_);
  return os.str();
}

}  // namespace cquat
