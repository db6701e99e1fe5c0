#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cquat/holomorphic.hpp"
#include "cquat/space.hpp"

namespace cquat {

/// Which side the increment multiplies the derivative from:
/// right-G-monogenic maps satisfy dPhi = h Phi', left ones dPhi = Phi' h.
/// The same tag selects the integral form: right is the integral of
/// dzeta * Psi, left the integral of Psi * dzeta.
enum class Side { right, left };

std::string_view to_string(Side side);
Side opposite(Side side);

/// An arbitrary continuous map E3 -> H(C), carrying the generators that
/// identify R^3 with E3.
class GenericMap {
 public:
  using Fn = std::function<Quaternion(const Point3&)>;

  GenericMap(Fn fn, GeneratorTriple gen, std::string name = {});

  static GenericMap constant(Quaternion value, GeneratorTriple gen);

  Quaternion operator()(const Point3& p) const { return fn_(p); }
  const GeneratorTriple& generators() const { return gen_; }
  const std::string& name() const { return name_; }

 private:
  Fn fn_;
  GeneratorTriple gen_;
  std::string name_;
};

/// Argument fed to a term of a generic map.
enum class TermArgument { xi1, xi2, conj_xi1, conj_xi2 };

std::string_view to_string(TermArgument arg);

/// fn(argument(zeta)) e_basis, basis in 1..4.
struct MapTerm {
  int basis = 1;
  HolomorphicFn fn;
  TermArgument argument = TermArgument::xi1;
};

/// Sum of terms; used for negative controls such as conj(xi1) e1.
GenericMap generic_from_terms(std::vector<MapTerm> terms, GeneratorTriple gen,
                              std::string name = {});

/// Real and imaginary parts of the e-coefficients, Psi = sum (U_k + i V_k) e_k.
struct ComponentFunctions {
  using Sampler = std::function<double(const Point3&)>;
  std::array<Sampler, 4> u;
  std::array<Sampler, 4> v;

  Quaternion recombine(const Point3& p) const;
};

ComponentFunctions component_functions(const GenericMap& g);

/// A G-monogenic map built from four holomorphic functions:
///   right: F1(xi1) e1 + F2(xi2) e2 + F3(xi1) e3 + F4(xi2) e4
///   left:  F1(xi1) e1 + F2(xi2) e2 + F3(xi2) e3 + F4(xi1) e4
class MonogenicMap {
 public:
  /// Rejects dependent generators.
  MonogenicMap(Side side, std::array<HolomorphicFn, 4> components,
               GeneratorTriple gen, std::string name = {});

  Side side() const { return side_; }
  const std::array<HolomorphicFn, 4>& components() const { return components_; }
  const GeneratorTriple& generators() const { return gen_; }
  const std::string& name() const { return name_; }

  /// Which xi (1 or 2) component k (zero-based) is evaluated on.
  int argument_index(std::size_t k) const;
  bool is_entire() const;

  MonogenicMap derivative_map() const;

 private:
  Side side_;
  std::array<HolomorphicFn, 4> components_;
  GeneratorTriple gen_;
  std::string name_;
};

/// Throws EvaluationError near a declared pole.
Quaternion eval(const MonogenicMap& m, const Point3& p);
Quaternion derivative(const MonogenicMap& m, const Point3& p);

/// norm_e of (Phi(zeta + eps h) - Phi(zeta))/eps - h Phi'(zeta) for the right
/// form, or of the same quotient minus Phi'(zeta) h for the left form.
double gateaux_residual(const MonogenicMap& m, const Point3& p, const Point3& h,
                        double eps, Side form);
inline double gateaux_residual(const MonogenicMap& m, const Point3& p,
                               const Point3& h, double eps) {
  return gateaux_residual(m, p, h, eps, m.side());
}

/// Residual below which a Gateaux residual counts as identically zero,
/// relative to 1 + norm_e(Phi(zeta)).
inline constexpr double kExactResidual = 1e-10;

/// Residuals over a range of eps and the verdict on whether they vanish:
/// either identically (all below the exact threshold) or with a log-log
/// slope inside [slope_min, slope_max].
struct GateauxProbe {
  std::vector<double> eps;
  std::vector<double> residuals;
  double slope = 0.0;
  bool exact = false;
  bool vanishes = false;
};

GateauxProbe probe_gateaux(const MonogenicMap& m, const Point3& p, const Point3& h,
                           std::span<const double> eps, Side form,
                           double slope_min = 0.9, double slope_max = 1.1);

GenericMap to_generic(const MonogenicMap& m);

}  // namespace cquat
