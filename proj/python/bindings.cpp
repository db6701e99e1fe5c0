#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cquat/format.hpp"
#include "cquat/harness.hpp"

namespace py = pybind11;
using namespace cquat;

namespace {

Point3 to_point(const std::array<double, 3>& p) { return {p[0], p[1], p[2]}; }
std::array<double, 3> from_point(const Point3& p) { return {p.x, p.y, p.z}; }

std::vector<Point3> to_points(const std::vector<std::array<double, 3>>& ps) {
  std::vector<Point3> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(to_point(p));
  return out;
}

Side to_side(const std::string& s) {
  if (s == "right") return Side::right;
  if (s == "left") return Side::left;
  throw py::value_error("side must be 'right' or 'left'");
}

Rule to_rule(const std::string& s) {
  if (s == "trapezoid") return Rule::trapezoid;
  if (s == "left_endpoint") return Rule::left_endpoint;
  throw py::value_error("rule must be 'trapezoid' or 'left_endpoint'");
}

}  // namespace

PYBIND11_MODULE(_cquat, m) {
  m.doc() = "Biquaternion algebra, monogenic maps and curve integrals";
  m.attr("__version__") = "0.1.0";

  py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_ArithmeticError);
  py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<>())
      .def(py::init<Complex, Complex, Complex, Complex>(), py::arg("c1"), py::arg("c2"),
           py::arg("c3"), py::arg("c4"))
      .def_static("basis", &Quaternion::basis, py::arg("k"))
      .def_static("zero", &Quaternion::zero)
      .def_static("one", &Quaternion::one)
      .def("coefficients", [](const Quaternion& q) {
        const auto& c = q.coefficients();
        return std::vector<Complex>(c.begin(), c.end());
      })
      .def("__getitem__", [](const Quaternion& q, std::size_t k) {
        if (k >= 4) throw py::index_error();
        return q[k];
      })
      .def("norm", &norm_e)
      .def("to_ijk", [](const Quaternion& q) {
        const auto h = to_ijk(q);
        return std::vector<Complex>{h.scalar, h.i, h.j, h.k};
      })
      .def_static("from_ijk", [](Complex s, Complex i, Complex j, Complex k) {
        return from_ijk({s, i, j, k});
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * py::self)
      .def(Complex() * py::self)
      .def(py::self * Complex())
      .def(py::self == py::self)
      .def("__repr__", [](const Quaternion& q) {
        std::ostringstream os;
        os << "Quaternion" << q;
        return os.str();
      });
  m.def("norm_e", &norm_e);

  py::class_<GeneratorTriple>(m, "GeneratorTriple")
      .def(py::init<Complex, Complex, Complex, Complex>(), py::arg("a1"), py::arg("a2"),
           py::arg("b1"), py::arg("b2"))
      .def_static("standard", &GeneratorTriple::standard)
      .def_readwrite("a1", &GeneratorTriple::a1)
      .def_readwrite("a2", &GeneratorTriple::a2)
      .def_readwrite("b1", &GeneratorTriple::b1)
      .def_readwrite("b2", &GeneratorTriple::b2);

  m.def("embed", [](const std::array<double, 3>& p, const GeneratorTriple& gen) {
    return embed(to_point(p), gen);
  }, py::arg("point"), py::arg("gen") = GeneratorTriple::standard());
  m.def("xi_coordinates", [](const std::array<double, 3>& p, const GeneratorTriple& gen) {
    const auto xi = xi_coordinates(to_point(p), gen);
    return py::make_tuple(xi.xi1, xi.xi2);
  }, py::arg("point"), py::arg("gen") = GeneratorTriple::standard());
  m.def("is_independent", [](const GeneratorTriple& gen) { return check_independence(gen).independent; });
  m.def("smallest_singular_value",
        [](const GeneratorTriple& gen) { return check_independence(gen).smallest_singular_value; });
  m.def("component_bound_constant", &component_bound_constant);

  py::class_<HolomorphicFn>(m, "HolomorphicFn")
      .def_static("parse", &parse_holomorphic, py::arg("spec"))
      .def("__call__", &HolomorphicFn::operator())
      .def("derivative", &HolomorphicFn::derivative)
      .def("describe", &HolomorphicFn::describe)
      .def("__repr__", [](const HolomorphicFn& f) { return "HolomorphicFn('" + f.describe() + "')"; });

  py::class_<Curve>(m, "Curve")
      .def_static("polyline", [](const std::vector<std::array<double, 3>>& v, bool closed) {
        return Curve::polyline(to_points(v), closed);
      }, py::arg("vertices"), py::arg("closed") = true)
      .def_static("segment", [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return Curve::segment(to_point(a), to_point(b));
      })
      .def_static("ellipse", [](const std::array<double, 3>& c, const std::array<double, 3>& u,
                                const std::array<double, 3>& v) {
        return Curve::ellipse(to_point(c), to_point(u), to_point(v));
      })
      .def_static("circle", [](const std::array<double, 3>& c, double r) {
        return Curve::ellipse(to_point(c), {r, 0, 0}, {0, r, 0});
      }, py::arg("center"), py::arg("radius"))
      .def_static("concatenate", &Curve::concatenate)
      .def("at", [](const Curve& c, double t) { return from_point(c.at(t)); })
      .def_property_readonly("closed", &Curve::closed)
      .def("reversed", &Curve::reversed)
      .def("arc", &Curve::arc)
      .def("points", [](const Curve& c, std::size_t n) {
        std::vector<std::array<double, 3>> out;
        for (const auto& p : c.materialize(n).points) out.push_back(from_point(p));
        return out;
      });
  m.def("mes", py::overload_cast<const Curve&, std::size_t>(&mes), py::arg("curve"), py::arg("n"));

  py::class_<GenericMap>(m, "GenericMap")
      .def_static("constant", &GenericMap::constant, py::arg("value"),
                  py::arg("gen") = GeneratorTriple::standard())
      .def_static("from_terms", [](const std::vector<std::tuple<int, std::string, std::string>>& terms,
                                   const GeneratorTriple& gen) {
        std::vector<MapTerm> parsed;
        for (const auto& [basis, fn, arg] : terms) {
          TermArgument a;
          if (arg == "xi1") a = TermArgument::xi1;
          else if (arg == "xi2") a = TermArgument::xi2;
          else if (arg == "conj_xi1") a = TermArgument::conj_xi1;
          else if (arg == "conj_xi2") a = TermArgument::conj_xi2;
          else throw py::value_error("unknown term argument '" + arg + "'");
          parsed.push_back({basis, parse_holomorphic(fn), a});
        }
        return generic_from_terms(std::move(parsed), gen);
      }, py::arg("terms"), py::arg("gen") = GeneratorTriple::standard())
      .def("__call__", [](const GenericMap& g, const std::array<double, 3>& p) { return g(to_point(p)); });

  py::class_<MonogenicMap>(m, "MonogenicMap")
      .def(py::init([](const std::string& side, const std::vector<std::string>& fns,
                       const GeneratorTriple& gen) {
             if (fns.size() > 4) throw py::value_error("at most four component functions");
             std::array<HolomorphicFn, 4> parsed;
             for (std::size_t k = 0; k < fns.size(); ++k) parsed[k] = parse_holomorphic(fns[k]);
             return MonogenicMap(to_side(side), std::move(parsed), gen);
           }),
           py::arg("side"), py::arg("components"), py::arg("gen") = GeneratorTriple::standard())
      .def_property_readonly("side", [](const MonogenicMap& mm) { return std::string(to_string(mm.side())); })
      .def("__call__", [](const MonogenicMap& mm, const std::array<double, 3>& p) { return eval(mm, to_point(p)); })
      .def("derivative", [](const MonogenicMap& mm, const std::array<double, 3>& p) {
        return derivative(mm, to_point(p));
      })
      .def("gateaux_residual", [](const MonogenicMap& mm, const std::array<double, 3>& p,
                                  const std::array<double, 3>& h, double eps, const std::string& form) {
        return gateaux_residual(mm, to_point(p), to_point(h), eps, form.empty() ? mm.side() : to_side(form));
      }, py::arg("point"), py::arg("direction"), py::arg("eps"), py::arg("form") = "")
      .def("as_generic", &to_generic);

  m.def("integrate", [](const Curve& c, const GenericMap& g, const std::string& side, std::size_t n,
                        const std::string& rule) {
    return integrate_polyline(c.materialize(n), g, to_side(side), to_rule(rule));
  }, py::arg("curve"), py::arg("map"), py::arg("side") = "right", py::arg("n") = 256,
        py::arg("rule") = "trapezoid");
  m.def("integrate_componentwise", [](const Curve& c, const GenericMap& g, const std::string& side,
                                      std::size_t n, const std::string& rule) {
    return integrate_polyline_componentwise(c.materialize(n), g, to_side(side), to_rule(rule));
  }, py::arg("curve"), py::arg("map"), py::arg("side") = "right", py::arg("n") = 256,
        py::arg("rule") = "trapezoid");
  m.def("refine_until", [](const Curve& c, const GenericMap& g, const std::string& side, double tol,
                           const std::vector<std::size_t>& schedule) {
    const auto r = refine_until(c, g, to_side(side), tol, schedule.empty() ? doubling_schedule(5, 18) : schedule);
    py::list table;
    for (const auto& row : r.table) table.append(py::make_tuple(row.n, row.norm, row.delta));
    return py::dict(py::arg("value") = r.result.value, py::arg("n") = r.result.n,
                    py::arg("converged") = r.converged, py::arg("table") = table);
  }, py::arg("curve"), py::arg("map"), py::arg("side") = "right", py::arg("tol") = 1e-8,
        py::arg("schedule") = std::vector<std::size_t>{});

  m.def("verify", [](const std::string& path, const std::string& suite) {
    const Scenario sc = load_scenario(path);
    RunOptions options;
    if (suite != "all") {
      options.only = parse_suite_kind(suite);
      if (!options.only) throw py::value_error("unknown suite kind '" + suite + "'");
    }
    const Report report = run_scenario(sc, options);
    return py::make_tuple(report.exit_code(), write_report(report));
  }, py::arg("scenario"), py::arg("suite") = "all",
        "Runs a scenario file and returns (exit_code, report_text).");
}
