#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cquat/curve.hpp"
#include "cquat/integrals.hpp"
#include "cquat/monogenic.hpp"

namespace cquat {

/// A schema violation, carrying the line and field that caused it.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& source, std::size_t line, const std::string& field,
                const std::string& message);

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

enum class SuiteKind { t1, t2, t3, proof, neg };
enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(SuiteKind kind);
std::string_view to_string(Verdict verdict);
std::optional<SuiteKind> parse_suite_kind(std::string_view text);

/// Numerical settings shared by all suites.
struct Settings {
  Rule rule = Rule::trapezoid;
  /// Refinement schedule for refine_until.
  std::vector<std::size_t> refinements = doubling_schedule(5, 18);
  /// Fixed schedule over which the empirical convergence slope is fitted.
  std::vector<std::size_t> slope_refinements = doubling_schedule(5, 12);

  double tol_theorem = 1e-8;
  double tol_oracle = 1e-13;
  double tol_cancellation = 1e-10;
  /// Integral norms at or below this are treated as roundoff.
  double noise_floor = 1e-12;
  double residual_slope_min = 0.9;
  double residual_slope_max = 1.1;
  double convergence_slope_min = 1.8;
  double convergence_slope_max = 2.2;

  /// Interior levels of the homotopy; s = 0 is the boundary curve itself.
  std::vector<double> s_grid = {0.5, 0.25, 0.1, 0.05, 0.01};
  std::vector<double> gateaux_eps = {1e-2, 1e-3, 1e-4};
  std::size_t gateaux_points = 2;       // sampled t values per interior level
  std::size_t random_directions = 10;   // in addition to i1, i2, i3
  std::size_t transversal_samples = 16; // Gamma^t curves checked for finite length
  std::size_t hypothesis_resolution = 1024;
  std::size_t proof_resolution = 1024;
  std::size_t transversal_resolution = 32;
  std::uint64_t seed = 0;
};

struct MapDef {
  std::string name;
  GenericMap generic;
  /// Present for maps given by F1..F4; absent for term-built generic maps.
  std::optional<MonogenicMap> monogenic;
};

struct CurveDef {
  std::string name;
  Curve curve;
};

struct HomotopyDef {
  std::string name;
  std::string boundary;
  HomotopyFamily family;
};

struct SuiteDef {
  std::string name;
  SuiteKind kind = SuiteKind::t1;
  std::vector<std::string> maps;
  std::vector<std::string> curves;
  std::vector<std::string> homotopies;
  std::vector<double> rho;
  Verdict expect = Verdict::pass;
};

struct Scenario {
  std::string name;
  GeneratorTriple gen = GeneratorTriple::standard();
  Settings settings;
  std::vector<MapDef> maps;
  std::vector<CurveDef> curves;
  std::vector<HomotopyDef> homotopies;
  std::vector<SuiteDef> suites;

  const MapDef& map(std::string_view name) const;
  const CurveDef& curve(std::string_view name) const;
  const HomotopyDef& homotopy(std::string_view name) const;
};

/// Parses the line-based scenario format (see docs/scenario-format.md).
/// `source` names the input in error messages.
Scenario parse_scenario(std::string_view text, const std::string& source = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);

/// Inverse of HolomorphicFn::describe.
HolomorphicFn parse_holomorphic(std::string_view text);

}  // namespace cquat
