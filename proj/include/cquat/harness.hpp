#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cquat/integrals.hpp"
#include "cquat/report.hpp"
#include "cquat/scenario.hpp"

namespace cquat {

/// Relative growth of a polyline length under doubling of the resolution
/// above which a curve is reported as not rectifiable at the sampled scale.
inline constexpr double kRectifiableGrowth = 1e-3;

/// Refinement of a closed-curve integral plus its empirical convergence
/// order over the slope schedule.
struct ClosedCurveCheck {
  Refinement refinement;
  std::vector<RefinementRow> slope_table;
  /// Decay exponent of the integral norm; nullopt when fewer than three rows
  /// of the slope table lie above the noise floor.
  std::optional<double> slope;
  std::size_t resolved_rows = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string error;
};

/// PASS iff the refinement converged to a value of norm <= tol_theorem.
/// Evaluation failures give INCONCLUSIVE.
ClosedCurveCheck check_closed_curve(const Curve& curve, const GenericMap& g, Side side,
                                    const Settings& settings);

/// i1, i2, i3 followed by `random` unit directions drawn from `seed`.
std::vector<Point3> probe_directions(std::size_t random, std::uint64_t seed);

struct GateauxSummary {
  std::size_t probes = 0;
  std::size_t failures = 0;
  std::size_t exact = 0;
  double min_slope = 0.0;
  double max_slope = 0.0;
  double worst_residual = 0.0;  // residual at the smallest eps, worst failing probe
  bool ok = false;
};

/// Probes the Gateaux residual of the given form at interior points H(s, t)
/// for s on the grid and seeded random t.
GateauxSummary check_gateaux_on_homotopy(const HomotopyFamily& h, const MonogenicMap& m,
                                         Side form, const Settings& settings);

/// Boundary-curve check: hypothesis diagnostics, Gateaux residuals inside,
/// the refined boundary integral, and the approach of interior level-curve
/// integrals to it as s -> 0.
struct BoundaryCheck {
  std::vector<double> levels;             // 0 followed by the s grid, descending
  std::vector<double> level_mes;          // at hypothesis_resolution
  std::vector<double> level_mes_refined;  // at twice that
  double sup_level_mes = 0.0;
  std::vector<double> transversal_params;
  std::vector<double> transversal_mes;
  bool hypotheses_ok = false;

  GateauxSummary gateaux;
  Refinement boundary;
  std::vector<double> diff_levels;  // s grid, descending
  std::vector<double> diffs;        // norm_e of I(gamma^s) - I(gamma)
  bool diffs_monotone = false;

  Verdict verdict = Verdict::inconclusive;
  std::string reason;
};

BoundaryCheck check_boundary_curve(const HomotopyFamily& h, const MonogenicMap& m, Side side,
                                   const Settings& settings);

/// The closed loops built from boundary arcs of length rho, the matching
/// arcs of gamma^s, and the transversals joining them, for one level s.
struct LoopDecomposition {
  double s = 0.0;
  double rho = 0.0;
  std::size_t n = 0;
  double boundary_mes = 0.0;
  double level_mes = 0.0;
  double max_transversal_mes = 0.0;
  /// 1 + max transversal length / rho, the s-dependent factor of the bound.
  double bound_factor = 0.0;
  std::vector<double> loop_norms;
  double max_loop_norm = 0.0;
  double loops_mes_total = 0.0;
  /// max over loops and their vertices of norm_e(Phi(zeta) - Phi(zeta_{0,k})).
  double oscillation = 0.0;
  Quaternion loop_sum;
  Quaternion boundary_integral;
  Quaternion level_integral;
  /// norm_e(loop_sum - (boundary_integral - level_integral)).
  double cancellation_residual = 0.0;
  bool n_within_bounds = false;
};

/// Throws std::invalid_argument unless 0 < rho < mes(gamma)/2 and 0 < s <= 1.
LoopDecomposition decompose_into_loops(const HomotopyFamily& h, const GenericMap& g, Side side,
                                       double s, double rho, const Settings& settings);

SuiteReport run_suite(const Scenario& scenario, const SuiteDef& suite);

struct RunOptions {
  /// Run only suites of this kind; all suites when empty.
  std::optional<SuiteKind> only;
};

Report run_scenario(const Scenario& scenario, const RunOptions& options = {});

}  // namespace cquat
