#include "cquat/monogenic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cquat/numerics.hpp"

namespace cquat {

std::string_view to_string(Side side) {
  return side == Side::right ? "right" : "left";
}

Side opposite(Side side) { return side == Side::right ? Side::left : Side::right; }

std::string_view to_string(TermArgument arg) {
  switch (arg) {
    case TermArgument::xi1: return "xi1";
    case TermArgument::xi2: return "xi2";
    case TermArgument::conj_xi1: return "conj_xi1";
    case TermArgument::conj_xi2: return "conj_xi2";
  }
  return "?";
}

GenericMap::GenericMap(Fn fn, GeneratorTriple gen, std::string name)
    : fn_(std::move(fn)), gen_(gen), name_(std::move(name)) {
  if (!fn_) throw std::invalid_argument("generic map function is empty");
  require_independent(gen_);
}

GenericMap GenericMap::constant(Quaternion value, GeneratorTriple gen) {
  return GenericMap([value](const Point3&) { return value; }, gen, "constant");
}

GenericMap generic_from_terms(std::vector<MapTerm> terms, GeneratorTriple gen,
                              std::string name) {
  for (const auto& term : terms) {
    if (term.basis < 1 || term.basis > 4) {
      throw std::invalid_argument("map term basis index must be in 1..4");
    }
  }
  auto fn = [terms = std::move(terms), gen](const Point3& p) {
    const auto [xi1, xi2] = xi_coordinates(p, gen);
    std::array<Complex, 4> c{};
    for (const auto& term : terms) {
      Complex w;
      switch (term.argument) {
        case TermArgument::xi1: w = xi1; break;
        case TermArgument::xi2: w = xi2; break;
        case TermArgument::conj_xi1: w = std::conj(xi1); break;
        case TermArgument::conj_xi2: w = std::conj(xi2); break;
      }
      c[static_cast<std::size_t>(term.basis - 1)] += term.fn(w);
    }
    return Quaternion{c[0], c[1], c[2], c[3]};
  };
  return GenericMap(std::move(fn), gen, std::move(name));
}

Quaternion ComponentFunctions::recombine(const Point3& p) const {
  std::array<Complex, 4> c{};
  for (std::size_t k = 0; k < 4; ++k) c[k] = {u[k](p), v[k](p)};
  return {c[0], c[1], c[2], c[3]};
}

ComponentFunctions component_functions(const GenericMap& g) {
  ComponentFunctions out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.u[k] = [g, k](const Point3& p) { return g(p)[k].real(); };
    out.v[k] = [g, k](const Point3& p) { return g(p)[k].imag(); };
  }
  return out;
}

MonogenicMap::MonogenicMap(Side side, std::array<HolomorphicFn, 4> components,
                           GeneratorTriple gen, std::string name)
    : side_(side), components_(std::move(components)), gen_(gen), name_(std::move(name)) {
  require_independent(gen_);
}

int MonogenicMap::argument_index(std::size_t k) const {
  constexpr int kRight[4] = {1, 2, 1, 2};
  constexpr int kLeft[4] = {1, 2, 2, 1};
  return side_ == Side::right ? kRight[k] : kLeft[k];
}

bool MonogenicMap::is_entire() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const HolomorphicFn& f) { return f.is_entire(); });
}

MonogenicMap MonogenicMap::derivative_map() const {
  std::array<HolomorphicFn, 4> d;
  for (std::size_t k = 0; k < 4; ++k) d[k] = components_[k].derivative();
  return MonogenicMap(side_, std::move(d), gen_, name_ + "'");
}

namespace {

Quaternion evaluate_components(const MonogenicMap& m,
                               const std::array<HolomorphicFn, 4>& fns, const Point3& p) {
  const auto [xi1, xi2] = xi_coordinates(p, m.generators());
  std::array<Complex, 4> c{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (fns[k].is_zero()) continue;
    c[k] = fns[k](m.argument_index(k) == 1 ? xi1 : xi2);
  }
  return {c[0], c[1], c[2], c[3]};
}

}  // namespace

Quaternion eval(const MonogenicMap& m, const Point3& p) {
  return evaluate_components(m, m.components(), p);
}

Quaternion derivative(const MonogenicMap& m, const Point3& p) {
  std::array<HolomorphicFn, 4> d;
  for (std::size_t k = 0; k < 4; ++k) d[k] = m.components()[k].derivative();
  return evaluate_components(m, d, p);
}

double gateaux_residual(const MonogenicMap& m, const Point3& p, const Point3& h,
                        double eps, Side form) {
  if (!(eps > 0.0)) throw std::invalid_argument("gateaux_residual: eps must be positive");
  const Quaternion quotient = (eval(m, p + eps * h) - eval(m, p)) / eps;
  const Quaternion hq = embed(h, m.generators());
  const Quaternion d = derivative(m, p);
  const Quaternion predicted = form == Side::right ? hq * d : d * hq;
  return norm_e(quotient - predicted);
}

GateauxProbe probe_gateaux(const MonogenicMap& m, const Point3& p, const Point3& h,
                           std::span<const double> eps, Side form, double slope_min,
                           double slope_max) {
  GateauxProbe probe;
  probe.eps.assign(eps.begin(), eps.end());
  for (double e : eps) probe.residuals.push_back(gateaux_residual(m, p, h, e, form));

  const double scale = (1.0 + norm_e(eval(m, p)) + norm_e(derivative(m, p))) *
                       std::max(1.0, norm(h));
  probe.exact = std::all_of(probe.residuals.begin(), probe.residuals.end(),
                            [scale](double r) { return r <= kExactResidual * scale; });
  if (const auto slope = loglog_slope(probe.eps, probe.residuals)) probe.slope = *slope;
  probe.vanishes = probe.exact || (probe.slope >= slope_min && probe.slope <= slope_max);
  return probe;
}

GenericMap to_generic(const MonogenicMap& m) {
  return GenericMap([m](const Point3& p) { return eval(m, p); }, m.generators(), m.name());
}

}  // namespace cquat
