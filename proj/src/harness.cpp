#include "cquat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "cquat/format.hpp"
#include "cquat/numerics.hpp"

namespace cquat {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  return Verdict::pass;
}

std::vector<double> descending(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool non_increasing_to_noise(const std::vector<double>& values, double noise) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1] + noise) return false;
  }
  return true;
}

bool length_converges(double coarse, double fine) {
  if (!std::isfinite(coarse) || !std::isfinite(fine)) return false;
  return fine - coarse <= kRectifiableGrowth * std::max(coarse, 1e-300) + 1e-15;
}

Polyline slice(const Polyline& line, std::size_t from, std::size_t to) {
  Polyline out;
  out.points.assign(line.points.begin() + static_cast<std::ptrdiff_t>(from),
                    line.points.begin() + static_cast<std::ptrdiff_t>(to) + 1);
  out.params.assign(line.params.begin() + static_cast<std::ptrdiff_t>(from),
                    line.params.begin() + static_cast<std::ptrdiff_t>(to) + 1);
  return out;
}

Polyline reversed(Polyline line) {
  std::reverse(line.points.begin(), line.points.end());
  std::reverse(line.params.begin(), line.params.end());
  return line;
}

Polyline sample_level(const HomotopyFamily& h, double s, const std::vector<double>& grid) {
  Polyline line;
  line.params = grid;
  line.closed = h.closed();
  for (double t : grid) line.points.push_back(h.at(s, t));
  if (line.closed) line.points.back() = line.points.front();
  return line;
}

std::string case_title(const SuiteDef& suite, std::string_view map, std::string_view where) {
  return "case " + suite.name + "/" + std::string(map) + "@" + std::string(where);
}

}  // namespace

ClosedCurveCheck check_closed_curve(const Curve& curve, const GenericMap& g, Side side,
                                    const Settings& settings) {
  ClosedCurveCheck out;
  try {
    out.refinement = refine_until(curve, g, side, settings.tol_theorem, settings.refinements,
                                  settings.rule);
    std::vector<double> ns, norms;
    Quaternion previous;
    for (std::size_t n : settings.slope_refinements) {
      const Quaternion value = integrate_polyline(curve.materialize(n), g, side, settings.rule);
      const double nv = norm_e(value);
      out.slope_table.push_back({n, value, nv, norm_e(value - previous)});
      previous = value;
      if (nv > settings.noise_floor) {
        ns.push_back(static_cast<double>(n));
        norms.push_back(nv);
      }
    }
    out.resolved_rows = ns.size();
    if (ns.size() >= 3) {
      if (const auto slope = loglog_slope(ns, norms)) out.slope = -*slope;
    }
    const bool small = norm_e(out.refinement.result.value) <= settings.tol_theorem;
    out.verdict = out.refinement.converged && small ? Verdict::pass : Verdict::fail;
  } catch (const EvaluationError& e) {
    out.verdict = Verdict::inconclusive;
    out.error = e.what();
  }
  return out;
}

std::vector<Point3> probe_directions(std::size_t random, std::uint64_t seed) {
  std::vector<Point3> dirs = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::mt19937_64 rng(seed);
  while (dirs.size() < 3 + random) {
    const Point3 v{2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1};
    const double r = norm(v);
    if (r > 0.1 && r <= 1.0) dirs.push_back((1.0 / r) * v);
  }
  return dirs;
}

GateauxSummary check_gateaux_on_homotopy(const HomotopyFamily& h, const MonogenicMap& m,
                                         Side form, const Settings& settings) {
  GateauxSummary out;
  const auto dirs = probe_directions(settings.random_directions, settings.seed);
  std::mt19937_64 rng(settings.seed + 1);
  bool any_slope = false;
  for (double s : descending(settings.s_grid)) {
    for (std::size_t j = 0; j < settings.gateaux_points; ++j) {
      const Point3 p = h.at(s, uniform01(rng));
      for (const Point3& dir : dirs) {
        const auto probe = probe_gateaux(m, p, dir, settings.gateaux_eps, form,
                                         settings.residual_slope_min, settings.residual_slope_max);
        ++out.probes;
        if (probe.exact) {
          ++out.exact;
        } else {
          out.min_slope = any_slope ? std::min(out.min_slope, probe.slope) : probe.slope;
          out.max_slope = any_slope ? std::max(out.max_slope, probe.slope) : probe.slope;
          any_slope = true;
        }
        if (!probe.vanishes) {
          ++out.failures;
          out.worst_residual = std::max(out.worst_residual, probe.residuals.back());
        }
      }
    }
  }
  out.ok = out.failures == 0;
  return out;
}

BoundaryCheck check_boundary_curve(const HomotopyFamily& h, const MonogenicMap& m, Side side,
                                   const Settings& settings) {
  BoundaryCheck out;
  const GenericMap g = to_generic(m);
  try {
    // Hypotheses: bounded level-curve lengths and rectifiable transversals.
    out.levels = descending(settings.s_grid);
    out.levels.insert(out.levels.begin(), 0.0);
    const std::size_t res = settings.hypothesis_resolution;
    bool hypotheses = true;
    for (double s : out.levels) {
      const Curve level = level_curve(h, s);
      const double coarse = mes(level, res);
      const double fine = mes(level, 2 * res);
      out.level_mes.push_back(coarse);
      out.level_mes_refined.push_back(fine);
      out.sup_level_mes = std::max(out.sup_level_mes, fine);
      hypotheses = hypotheses && length_converges(coarse, fine);
    }
    for (std::size_t j = 0; j < settings.transversal_samples; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(settings.transversal_samples);
      const Curve tr = transversal_curve(h, t);
      const double coarse = mes(tr, res);
      const double fine = mes(tr, 2 * res);
      out.transversal_params.push_back(t);
      out.transversal_mes.push_back(fine);
      hypotheses = hypotheses && length_converges(coarse, fine);
    }
    out.hypotheses_ok = hypotheses && std::isfinite(out.sup_level_mes);
    if (!out.hypotheses_ok) {
      out.verdict = Verdict::inconclusive;
      out.reason = "hypothesis: curve lengths grow under refinement";
      return out;
    }

    out.gateaux = check_gateaux_on_homotopy(h, m, side, settings);
    out.boundary = refine_until(level_curve(h, 0.0), g, side, settings.tol_theorem,
                                settings.refinements, settings.rule);
    const std::size_t n = out.boundary.result.n;
    for (double s : descending(settings.s_grid)) {
      const Quaternion interior =
          integrate_polyline(level_curve(h, s).materialize(n), g, side, settings.rule);
      out.diff_levels.push_back(s);
      out.diffs.push_back(norm_e(interior - out.boundary.result.value));
    }
    out.diffs_monotone = non_increasing_to_noise(out.diffs, settings.noise_floor);

    std::vector<std::string> failed;
    if (!out.gateaux.ok) failed.push_back("gateaux residual does not vanish");
    if (!out.boundary.converged) failed.push_back("boundary integral did not converge");
    if (norm_e(out.boundary.result.value) > settings.tol_theorem) {
      failed.push_back("boundary integral exceeds tolerance");
    }
    if (!out.diffs_monotone) failed.push_back("level integrals do not approach the boundary");
    out.verdict = failed.empty() ? Verdict::pass : Verdict::fail;
    for (std::size_t i = 0; i < failed.size(); ++i) {
      out.reason += (i ? "; " : "") + failed[i];
    }
  } catch (const EvaluationError& e) {
    out.verdict = Verdict::inconclusive;
    out.reason = std::string("evaluation: ") + e.what();
  }
  return out;
}

LoopDecomposition decompose_into_loops(const HomotopyFamily& h, const GenericMap& g, Side side,
                                       double s, double rho, const Settings& settings) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("level s must lie in (0, 1]");
  if (!h.closed()) throw std::invalid_argument("loop decomposition needs a closed boundary");

  LoopDecomposition out;
  out.s = s;
  out.rho = rho;

  const Polyline boundary = level_curve(h, 0.0).materialize(settings.proof_resolution);
  const ArclengthSubdivision sub = subdivide_by_arclength(boundary, rho);
  out.n = sub.n;
  out.boundary_mes = sub.total_length;
  const auto upper = static_cast<std::size_t>(std::floor(sub.total_length / rho)) + 1;
  out.n_within_bounds = sub.n >= 2 && sub.n <= upper;

  std::vector<double> extra = h.t_breakpoints();
  extra.insert(extra.end(), sub.params.begin(), sub.params.end());
  const std::vector<double> grid = parameter_grid(settings.proof_resolution, extra);

  // Subdivision parameters as grid indices; the last loop closes at t = 1.
  std::vector<std::size_t> idx;
  for (double t : sub.params) {
    const auto it = std::lower_bound(grid.begin(), grid.end(), t);
    std::size_t j = static_cast<std::size_t>(it - grid.begin());
    if (j == grid.size() || (j > 0 && t - grid[j - 1] < grid[j] - t)) --j;
    idx.push_back(j);
  }
  idx.push_back(grid.size() - 1);

  const Polyline outer = sample_level(h, 0.0, grid);
  const Polyline inner = sample_level(h, s, grid);
  out.boundary_integral = integrate_polyline(outer, g, side, settings.rule);
  out.level_integral = integrate_polyline(inner, g, side, settings.rule);
  out.level_mes = mes(inner);

  // Transversal pieces from zeta_{0,k} to zeta_{s,k}.
  const std::size_t m = settings.transversal_resolution;
  std::vector<Polyline> transversals;
  for (std::size_t k = 0; k <= sub.n; ++k) {
    const std::size_t j = idx[k];
    Polyline tr;
    for (std::size_t i = 0; i <= m; ++i) {
      const double sigma = s * static_cast<double>(i) / static_cast<double>(m);
      tr.params.push_back(sigma);
      tr.points.push_back(h.at(sigma, grid[j]));
    }
    tr.points.front() = outer.points[j];
    tr.points.back() = inner.points[j];
    out.max_transversal_mes = std::max(out.max_transversal_mes, mes(tr));
    transversals.push_back(std::move(tr));
  }

  for (std::size_t k = 0; k <= sub.n; ++k) {
    const std::size_t a = idx[k];
    const std::size_t b = idx[k + 1];
    const Polyline& start_tr = transversals[k];
    const Polyline& end_tr = k == sub.n ? transversals[0] : transversals[k + 1];
    const std::vector<Polyline> pieces = {slice(outer, a, b), end_tr,
                                          reversed(slice(inner, a, b)), reversed(start_tr)};
    Quaternion loop;
    double loop_mes = 0.0;
    const Quaternion anchor = g(outer.points[a]);
    for (const Polyline& piece : pieces) {
      loop += integrate_polyline(piece, g, side, settings.rule);
      loop_mes += mes(piece);
      for (const Point3& p : piece.points) {
        out.oscillation = std::max(out.oscillation, norm_e(g(p) - anchor));
      }
    }
    out.loop_norms.push_back(norm_e(loop));
    out.loops_mes_total += loop_mes;
    out.loop_sum += loop;
  }
  out.max_loop_norm = *std::max_element(out.loop_norms.begin(), out.loop_norms.end());
  out.bound_factor = 1.0 + out.max_transversal_mes / rho;
  out.cancellation_residual =
      norm_e(out.loop_sum - (out.boundary_integral - out.level_integral));
  return out;
}

namespace {

void add_refinement(ReportSection& sec, const Refinement& r) {
  sec.add("converged", r.converged);
  sec.add("n", r.result.n);
  sec.add("value", r.result.value);
  sec.add("norm", norm_e(r.result.value));
  sec.add("error_estimate", r.result.error_estimate);
  sec.add("row_columns", "n norm delta");
  for (const auto& row : r.table) {
    sec.add("row", format_double(static_cast<double>(row.n)) + " " + format_double(row.norm) +
                       " " + format_double(row.delta));
  }
}

Verdict run_closed_curves(const Scenario& sc, const SuiteDef& suite, SuiteReport& report) {
  Verdict verdict = Verdict::pass;
  for (const auto& map_name : suite.maps) {
    const MapDef& map = sc.map(map_name);
    for (const auto& curve_name : suite.curves) {
      const auto check = check_closed_curve(sc.curve(curve_name).curve, map.generic,
                                            Side::right, sc.settings);
      ReportSection sec(case_title(suite, map_name, curve_name));
      sec.add("map", map_name).add("curve", curve_name).add("integral", "right");
      sec.add("tol", sc.settings.tol_theorem);
      if (!check.error.empty()) sec.add("error", check.error);
      add_refinement(sec, check.refinement);
      for (const auto& row : check.slope_table) {
        sec.add("slope_row", format_double(static_cast<double>(row.n)) + " " + format_double(row.norm));
      }
      sec.add("slope_resolved_rows", check.resolved_rows);
      sec.add("slope", check.slope ? format_double(*check.slope) : std::string("unresolved"));
      sec.add("verdict", std::string(to_string(check.verdict)));
      verdict = combine(verdict, check.verdict);
      report.sections.push_back(std::move(sec));
    }
  }
  return verdict;
}

Verdict run_boundary(const Scenario& sc, const SuiteDef& suite, Side side, SuiteReport& report) {
  Verdict verdict = Verdict::pass;
  for (const auto& map_name : suite.maps) {
    const MonogenicMap& m = *sc.map(map_name).monogenic;
    for (const auto& hom_name : suite.homotopies) {
      const auto check = check_boundary_curve(sc.homotopy(hom_name).family, m, side, sc.settings);
      ReportSection sec(case_title(suite, map_name, hom_name));
      sec.add("map", map_name).add("map_side", std::string(to_string(m.side())));
      sec.add("homotopy", hom_name).add("integral", std::string(to_string(side)));
      sec.add("tol", sc.settings.tol_theorem);
      sec.add("levels", check.levels);
      sec.add("level_mes", check.level_mes);
      sec.add("level_mes_refined", check.level_mes_refined);
      sec.add("sup_level_mes", check.sup_level_mes);
      sec.add("transversal_params", check.transversal_params);
      sec.add("transversal_mes", check.transversal_mes);
      sec.add("hypotheses_ok", check.hypotheses_ok);
      if (check.hypotheses_ok) {
        sec.add("gateaux_probes", check.gateaux.probes);
        sec.add("gateaux_exact", check.gateaux.exact);
        sec.add("gateaux_failures", check.gateaux.failures);
        sec.add("gateaux_slope_range",
                std::vector<double>{check.gateaux.min_slope, check.gateaux.max_slope});
        sec.add("gateaux_worst_residual", check.gateaux.worst_residual);
        add_refinement(sec, check.boundary);
        sec.add("diff_levels", check.diff_levels);
        sec.add("diffs", check.diffs);
        sec.add("diffs_monotone", check.diffs_monotone);
      }
      if (!check.reason.empty()) sec.add("reason", check.reason);
      sec.add("verdict", std::string(to_string(check.verdict)));
      verdict = combine(verdict, check.verdict);
      report.sections.push_back(std::move(sec));
    }
  }
  return verdict;
}

Verdict run_proof(const Scenario& sc, const SuiteDef& suite, SuiteReport& report) {
  Verdict verdict = Verdict::pass;
  const auto levels = descending(sc.settings.s_grid);
  for (const auto& map_name : suite.maps) {
    const MapDef& map = sc.map(map_name);
    const Side side = map.monogenic ? map.monogenic->side() : Side::right;
    for (const auto& hom_name : suite.homotopies) {
      const HomotopyFamily& h = sc.homotopy(hom_name).family;
      for (double rho : suite.rho) {
        ReportSection sec(case_title(suite, map_name, hom_name) + "/rho=" + format_double(rho));
        sec.add("map", map_name).add("homotopy", hom_name).add("rho", rho);
        sec.add("integral", std::string(to_string(side)));
        sec.add("columns", "s n max_loop_norm cancellation_residual mes_gamma mes_gamma_s "
                           "max_transversal_mes bound_factor loops_mes_total oscillation");
        std::vector<double> max_norms;
        bool cancellation_ok = true;
        bool n_ok = true;
        std::vector<ReportSection> loops;
        for (double s : levels) {
          const auto d = decompose_into_loops(h, map.generic, side, s, rho, sc.settings);
          sec.add("row", std::vector<double>{s, static_cast<double>(d.n), d.max_loop_norm,
                                             d.cancellation_residual, d.boundary_mes, d.level_mes,
                                             d.max_transversal_mes, d.bound_factor,
                                             d.loops_mes_total, d.oscillation});
          sec.add("loop_norms", d.loop_norms);
          max_norms.push_back(d.max_loop_norm);
          cancellation_ok = cancellation_ok && d.cancellation_residual <= sc.settings.tol_cancellation;
          n_ok = n_ok && d.n_within_bounds;
        }
        const bool decreasing = non_increasing_to_noise(max_norms, sc.settings.noise_floor);
        sec.add("cancellation_ok", cancellation_ok);
        sec.add("n_within_bounds", n_ok);
        sec.add("loop_norms_decreasing", decreasing);
        const Verdict v = cancellation_ok && n_ok && decreasing ? Verdict::pass : Verdict::fail;
        sec.add("verdict", std::string(to_string(v)));
        verdict = combine(verdict, v);
        report.sections.push_back(std::move(sec));
      }
    }
  }
  return verdict;
}

}  // namespace

SuiteReport run_suite(const Scenario& sc, const SuiteDef& suite) {
  SuiteReport report;
  report.name = suite.name;
  report.kind = suite.kind;
  report.expect = suite.expect;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (suite.kind) {
      case SuiteKind::t1:
      case SuiteKind::neg:
        report.verdict = run_closed_curves(sc, suite, report);
        break;
      case SuiteKind::t2:
        report.verdict = run_boundary(sc, suite, Side::right, report);
        break;
      case SuiteKind::t3:
        report.verdict = run_boundary(sc, suite, Side::left, report);
        break;
      case SuiteKind::proof:
        report.verdict = run_proof(sc, suite, report);
        break;
    }
  } catch (const EvaluationError& e) {
    report.verdict = Verdict::inconclusive;
    report.error = e.what();
  } catch (const std::invalid_argument& e) {
    report.verdict = Verdict::inconclusive;
    report.error = e.what();
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Report run_scenario(const Scenario& scenario, const RunOptions& options) {
  Report report;
  report.scenario = scenario.name;
  report.seed = scenario.settings.seed;
  for (const auto& suite : scenario.suites) {
    if (options.only && suite.kind != *options.only) continue;
    report.suites.push_back(run_suite(scenario, suite));
  }
  return report;
}

}  // namespace cquat
