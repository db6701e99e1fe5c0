#include "cquat/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "cquat/format.hpp"

namespace cquat {

namespace {

constexpr std::string_view kFormatTag = "cquat-scenario/1";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t offset = 0;
  while (offset < s.size()) {
    while (offset < s.size() && std::isspace(static_cast<unsigned char>(s[offset]))) ++offset;
    std::size_t end = offset;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
    if (end > offset) out.push_back(s.substr(offset, end - offset));
    offset = end;
  }
  return out;
}

struct Entry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

struct Section {
  std::string type;
  std::string name;
  std::size_t line = 0;
  std::vector<Entry> entries;
};

/// Field access for one section; unknown and duplicate keys are schema errors.
class Fields {
 public:
  Fields(const Section& section, const std::string& source)
      : section_(section), source_(source) {}

  std::string context() const {
    return section_.name.empty() ? "[" + section_.type + "]"
                                 : "[" + section_.type + " " + section_.name + "]";
  }

  [[noreturn]] void fail(const Entry& e, const std::string& message) const {
    throw ScenarioError(source_, e.line, e.key, context() + " " + message);
  }
  [[noreturn]] void fail_section(const std::string& key, const std::string& message) const {
    throw ScenarioError(source_, section_.line, key, context() + " " + message);
  }

  const Entry* find(std::string_view key) {
    used_.insert(std::string(key));
    const Entry* found = nullptr;
    for (const auto& e : section_.entries) {
      if (e.key != key) continue;
      if (found) fail(e, "duplicate field '" + e.key + "'");
      found = &e;
    }
    return found;
  }

  std::vector<const Entry*> all(std::string_view key) {
    used_.insert(std::string(key));
    std::vector<const Entry*> out;
    for (const auto& e : section_.entries) {
      if (e.key == key) out.push_back(&e);
    }
    return out;
  }

  const Entry& require(std::string_view key) {
    const Entry* e = find(key);
    if (!e) fail_section(std::string(key), "missing required field '" + std::string(key) + "'");
    return *e;
  }

  template <typename Fn>
  auto parse(const Entry& e, Fn fn) -> decltype(fn(std::string_view{})) {
    try {
      return fn(std::string_view(e.value));
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& ex) {
      fail(e, "field '" + e.key + "': " + ex.what());
    }
  }

  template <typename Fn>
  auto required(std::string_view key, Fn fn) {
    return parse(require(key), fn);
  }

  template <typename T, typename Fn>
  T optional(std::string_view key, T fallback, Fn fn) {
    const Entry* e = find(key);
    return e ? parse(*e, fn) : fallback;
  }

  void finish() const {
    for (const auto& e : section_.entries) {
      if (!used_.contains(e.key)) fail(e, "unknown field '" + e.key + "'");
    }
  }

 private:
  const Section& section_;
  const std::string& source_;
  std::set<std::string> used_;
};

double to_double(std::string_view s) { return parse_double(s); }

Complex to_complex(std::string_view s) { return parse_complex(s); }

std::size_t to_size(std::string_view s) {
  const double v = parse_double(s);
  if (v < 0 || v != std::floor(v) || v > 1e12) {
    throw std::invalid_argument("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return static_cast<std::size_t>(v);
}

bool to_bool(std::string_view s) {
  s = trim(s);
  if (s == "true" || s == "yes") return true;
  if (s == "false" || s == "no") return false;
  throw std::invalid_argument("expected true or false, got '" + std::string(s) + "'");
}

std::vector<double> to_doubles(std::string_view s) {
  std::vector<double> out;
  for (auto part : split(s, ',')) out.push_back(parse_double(part));
  return out;
}

std::vector<std::size_t> to_sizes(std::string_view s) {
  std::vector<std::size_t> out;
  for (auto part : split(s, ',')) out.push_back(to_size(part));
  return out;
}

std::vector<std::string> to_names(std::string_view s) {
  std::vector<std::string> out;
  for (auto part : split(s, ',')) {
    if (part.empty()) throw std::invalid_argument("empty name in list");
    out.emplace_back(part);
  }
  return out;
}

Point3 to_point(std::string_view s) {
  const auto v = to_doubles(s);
  if (v.size() != 3) throw std::invalid_argument("expected 'x, y, z'");
  return {v[0], v[1], v[2]};
}

std::vector<Point3> to_points(std::string_view s) {
  std::vector<Point3> out;
  for (auto part : split(s, ';')) {
    if (!part.empty()) out.push_back(to_point(part));
  }
  if (out.empty()) throw std::invalid_argument("expected at least one point");
  return out;
}

/// Parses "[a, b, c]" at the front of s, advancing s past the closing bracket.
std::vector<Complex> take_complex_list(std::string_view& s) {
  s = trim(s);
  if (s.empty() || s.front() != '[') throw std::invalid_argument("expected '['");
  const std::size_t close = s.find(']');
  if (close == std::string_view::npos) throw std::invalid_argument("missing ']'");
  const std::string_view body = trim(s.substr(1, close - 1));
  s = trim(s.substr(close + 1));
  std::vector<Complex> out;
  if (body.empty()) return out;
  for (auto part : split(body, ',')) out.push_back(parse_complex(part));
  return out;
}

TermArgument to_term_argument(std::string_view s) {
  s = trim(s);
  if (s == "xi1") return TermArgument::xi1;
  if (s == "xi2") return TermArgument::xi2;
  if (s == "conj_xi1") return TermArgument::conj_xi1;
  if (s == "conj_xi2") return TermArgument::conj_xi2;
  throw std::invalid_argument("unknown term argument '" + std::string(s) +
                              "' (xi1, xi2, conj_xi1, conj_xi2)");
}

int to_basis_index(std::string_view s) {
  s = trim(s);
  if (s.size() == 2 && s[0] == 'e' && s[1] >= '1' && s[1] <= '4') return s[1] - '0';
  throw std::invalid_argument("expected basis e1..e4, got '" + std::string(s) + "'");
}

MapTerm to_term(std::string_view s) {
  s = trim(s);
  const std::size_t space = s.find_first_of(" \t");
  const std::size_t at = s.rfind('@');
  if (space == std::string_view::npos || at == std::string_view::npos || at < space) {
    throw std::invalid_argument("expected 'e<k> <function> @ <argument>'");
  }
  return {to_basis_index(s.substr(0, space)),
          parse_holomorphic(s.substr(space + 1, at - space - 1)),
          to_term_argument(s.substr(at + 1))};
}

std::vector<Section> lex(std::string_view text, const std::string& source,
                         std::vector<Entry>& preamble) {
  std::vector<Section> sections;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '#' && (k == 0 || std::isspace(static_cast<unsigned char>(line[k - 1])))) {
        line = line.substr(0, k);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ScenarioError(source, line_no, "", "malformed section header");
      }
      const auto words = split_words(line.substr(1, line.size() - 2));
      if (words.empty() || words.size() > 2) {
        throw ScenarioError(source, line_no, "", "section header must be [type] or [type name]");
      }
      sections.push_back({std::string(words[0]), words.size() == 2 ? std::string(words[1]) : "",
                          line_no, {}});
    } else {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ScenarioError(source, line_no, "", "expected 'key = value'");
      }
      Entry e{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))),
              line_no};
      if (e.key.empty()) throw ScenarioError(source, line_no, "", "empty key");
      if (sections.empty()) {
        preamble.push_back(std::move(e));
      } else {
        sections.back().entries.push_back(std::move(e));
      }
    }
    if (end == text.size()) break;
  }
  return sections;
}

Curve build_wobbly(Point3 center, double radius, double amplitude, double lobes,
                   double height, double height_lobes) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  return Curve(
      [=](double t) {
        const double a = t >= 1.0 ? 0.0 : kTwoPi * t;
        const double r = radius * (1.0 + amplitude * std::cos(lobes * a));
        return center + Point3{r * std::cos(a), r * std::sin(a), height * std::sin(height_lobes * a)};
      },
      true);
}

void validate_settings(const Settings& s) {
  QuadratureSpec{s.rule, 2, s.refinements}.validate();
  QuadratureSpec{s.rule, 2, s.slope_refinements}.validate();
  if (s.refinements.empty() || s.slope_refinements.size() < 2) {
    throw std::invalid_argument("refinement schedules are too short");
  }
  for (double v : {s.tol_theorem, s.tol_oracle, s.tol_cancellation, s.noise_floor}) {
    if (!(v > 0.0)) throw std::invalid_argument("tolerances must be positive");
  }
  for (double v : s.s_grid) {
    if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument("s_grid entries must lie in (0, 1)");
  }
  for (double v : s.gateaux_eps) {
    if (!(v > 0.0)) throw std::invalid_argument("gateaux_eps entries must be positive");
  }
  if (s.gateaux_eps.size() < 2) throw std::invalid_argument("gateaux_eps needs two entries");
  if (s.hypothesis_resolution < 2 || s.proof_resolution < 2 || s.transversal_resolution < 1) {
    throw std::invalid_argument("resolutions are too small");
  }
}

}  // namespace

ScenarioError::ScenarioError(const std::string& source, std::size_t line,
                             const std::string& field, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) +
                         (field.empty() ? "" : " (" + field + ")") + ": " + message),
      line_(line),
      field_(field) {}

std::string_view to_string(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::t1: return "t1";
    case SuiteKind::t2: return "t2";
    case SuiteKind::t3: return "t3";
    case SuiteKind::proof: return "proof";
    case SuiteKind::neg: return "neg";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::optional<SuiteKind> parse_suite_kind(std::string_view text) {
  for (auto kind : {SuiteKind::t1, SuiteKind::t2, SuiteKind::t3, SuiteKind::proof, SuiteKind::neg}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

HolomorphicFn parse_holomorphic(std::string_view text) {
  std::string_view s = trim(text);
  const std::size_t space = s.find_first_of(" \t");
  const std::string_view head = s.substr(0, space);
  std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(s.substr(space));

  auto expect_end = [&rest] {
    if (!trim(rest).empty()) throw std::invalid_argument("unexpected trailing text '" + std::string(rest) + "'");
  };
  if (head == "zero") {
    expect_end();
    return HolomorphicFn::zero();
  }
  if (head == "id") {
    expect_end();
    return HolomorphicFn::identity();
  }
  if (head == "const") return HolomorphicFn::constant(parse_complex(rest));
  if (head == "pow") return HolomorphicFn::power(static_cast<unsigned>(to_size(rest)));
  if (head == "poly") {
    auto c = take_complex_list(rest);
    expect_end();
    return HolomorphicFn::polynomial(std::move(c));
  }
  if (head == "exp") {
    const auto words = split_words(rest);
    if (words.size() != 2) throw std::invalid_argument("expected 'exp <scale> <rate>'");
    return HolomorphicFn::exponential(parse_complex(words[0]), parse_complex(words[1]));
  }
  if (head == "rational") {
    auto num = take_complex_list(rest);
    if (rest.empty() || rest.front() != '/') throw std::invalid_argument("expected '/' after numerator");
    rest = trim(rest.substr(1));
    auto den = take_complex_list(rest);
    std::vector<Complex> poles;
    if (!rest.empty()) {
      if (!rest.starts_with("poles")) throw std::invalid_argument("expected 'poles [...]'");
      rest = trim(rest.substr(5));
      poles = take_complex_list(rest);
      expect_end();
    }
    return HolomorphicFn::rational(std::move(num), std::move(den), std::move(poles));
  }
  throw std::invalid_argument("unknown function '" + std::string(head) +
                              "' (zero, id, const, pow, poly, exp, rational)");
}

const MapDef& Scenario::map(std::string_view name) const {
  for (const auto& m : maps) {
    if (m.name == name) return m;
  }
  throw std::out_of_range("unknown map '" + std::string(name) + "'");
}

const CurveDef& Scenario::curve(std::string_view name) const {
  for (const auto& c : curves) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("unknown curve '" + std::string(name) + "'");
}

const HomotopyDef& Scenario::homotopy(std::string_view name) const {
  for (const auto& h : homotopies) {
    if (h.name == name) return h;
  }
  throw std::out_of_range("unknown homotopy '" + std::string(name) + "'");
}

Scenario parse_scenario(std::string_view text, const std::string& source) {
  std::vector<Entry> preamble;
  const std::vector<Section> sections = lex(text, source, preamble);

  Scenario sc;
  {
    Section top{"preamble", "", 1, preamble};
    Fields f(top, source);
    const Entry* format = f.find("format");
    if (!format) throw ScenarioError(source, 1, "format", "missing 'format = cquat-scenario/1'");
    if (format->value != kFormatTag) {
      throw ScenarioError(source, format->line, "format",
                          "unsupported format '" + format->value + "'");
    }
    sc.name = f.optional<std::string>("name", "scenario", [](std::string_view s) { return std::string(s); });
    f.finish();
  }

  auto by_type = [&sections](std::string_view type) {
    std::vector<const Section*> out;
    for (const auto& s : sections) {
      if (s.type == type) out.push_back(&s);
    }
    return out;
  };

  static const std::set<std::string> kKnown = {"generators", "quadrature", "tolerances", "sampling",
                                               "map", "curve", "homotopy", "suite"};
  static const std::set<std::string> kNamed = {"map", "curve", "homotopy", "suite"};
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& s : sections) {
    if (!kKnown.contains(s.type)) {
      throw ScenarioError(source, s.line, "", "unknown section type '" + s.type + "'");
    }
    if (kNamed.contains(s.type) == s.name.empty()) {
      throw ScenarioError(source, s.line, "",
                          kNamed.contains(s.type) ? "section [" + s.type + "] needs a name"
                                                  : "section [" + s.type + "] takes no name");
    }
    if (!seen.insert({s.type, s.name}).second) {
      throw ScenarioError(source, s.line, "", "duplicate section [" + s.type +
                                                  (s.name.empty() ? "" : " " + s.name) + "]");
    }
  }

  for (const Section* s : by_type("generators")) {
    Fields f(*s, source);
    sc.gen.a1 = f.required("a1", to_complex);
    sc.gen.a2 = f.required("a2", to_complex);
    sc.gen.b1 = f.required("b1", to_complex);
    sc.gen.b2 = f.required("b2", to_complex);
    f.finish();
    const auto check = check_independence(sc.gen);
    if (!check.independent) {
      f.fail_section("a1", "generators are linearly dependent over R (smallest singular value " +
                               format_double(check.smallest_singular_value) + ")");
    }
  }

  Settings& st = sc.settings;
  for (const Section* s : by_type("quadrature")) {
    Fields f(*s, source);
    st.rule = f.optional("rule", st.rule, [](std::string_view v) {
      if (v == "trapezoid") return Rule::trapezoid;
      if (v == "left_endpoint") return Rule::left_endpoint;
      throw std::invalid_argument("rule must be trapezoid or left_endpoint");
    });
    st.refinements = f.optional("refinements", st.refinements, to_sizes);
    st.slope_refinements = f.optional("slope_refinements", st.slope_refinements, to_sizes);
    f.finish();
  }
  for (const Section* s : by_type("tolerances")) {
    Fields f(*s, source);
    st.tol_theorem = f.optional("theorem", st.tol_theorem, to_double);
    st.tol_oracle = f.optional("oracle", st.tol_oracle, to_double);
    st.tol_cancellation = f.optional("cancellation", st.tol_cancellation, to_double);
    st.noise_floor = f.optional("noise_floor", st.noise_floor, to_double);
    auto window = [](std::string_view v) {
      const auto w = to_doubles(v);
      if (w.size() != 2 || !(w[0] < w[1])) throw std::invalid_argument("expected 'min, max'");
      return std::pair{w[0], w[1]};
    };
    std::tie(st.residual_slope_min, st.residual_slope_max) = f.optional(
        "residual_slope", std::pair{st.residual_slope_min, st.residual_slope_max}, window);
    std::tie(st.convergence_slope_min, st.convergence_slope_max) = f.optional(
        "convergence_slope", std::pair{st.convergence_slope_min, st.convergence_slope_max}, window);
    f.finish();
  }
  for (const Section* s : by_type("sampling")) {
    Fields f(*s, source);
    st.s_grid = f.optional("s_grid", st.s_grid, to_doubles);
    st.gateaux_eps = f.optional("gateaux_eps", st.gateaux_eps, to_doubles);
    st.gateaux_points = f.optional("gateaux_points", st.gateaux_points, to_size);
    st.random_directions = f.optional("random_directions", st.random_directions, to_size);
    st.transversal_samples = f.optional("transversal_samples", st.transversal_samples, to_size);
    st.hypothesis_resolution = f.optional("hypothesis_resolution", st.hypothesis_resolution, to_size);
    st.proof_resolution = f.optional("proof_resolution", st.proof_resolution, to_size);
    st.transversal_resolution = f.optional("transversal_resolution", st.transversal_resolution, to_size);
    st.seed = f.optional<std::uint64_t>("seed", st.seed, to_size);
    f.finish();
  }
  try {
    validate_settings(st);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(source, 1, "", std::string("invalid settings: ") + e.what());
  }

  for (const Section* s : by_type("map")) {
    Fields f(*s, source);
    const auto terms = f.all("term");
    const Entry* side = f.find("side");
    if (!terms.empty()) {
      if (side) f.fail(*side, "term-built maps take no 'side'");
      std::vector<MapTerm> parsed;
      for (const Entry* e : terms) parsed.push_back(f.parse(*e, to_term));
      f.finish();
      sc.maps.push_back({s->name, generic_from_terms(std::move(parsed), sc.gen, s->name), std::nullopt});
      continue;
    }
    if (!side) f.fail_section("side", "map needs either 'side' with F1..F4 or 'term' lines");
    const Side parsed_side = f.parse(*side, [](std::string_view v) {
      if (v == "right") return Side::right;
      if (v == "left") return Side::left;
      throw std::invalid_argument("side must be right or left");
    });
    std::array<HolomorphicFn, 4> fns;
    for (std::size_t k = 0; k < 4; ++k) {
      fns[k] = f.optional("F" + std::to_string(k + 1), HolomorphicFn::zero(), parse_holomorphic);
    }
    f.finish();
    MonogenicMap m(parsed_side, std::move(fns), sc.gen, s->name);
    sc.maps.push_back({s->name, to_generic(m), m});
  }

  for (const Section* s : by_type("curve")) {
    Fields f(*s, source);
    const std::string kind = f.required("kind", [](std::string_view v) { return std::string(v); });
    auto build = [&]() -> Curve {
      if (kind == "ellipse") {
        return Curve::ellipse(f.required("center", to_point), f.required("u", to_point),
                              f.required("v", to_point));
      }
      if (kind == "circle") {
        const Point3 c = f.required("center", to_point);
        const double r = f.required("radius", to_double);
        return Curve::ellipse(c, {r, 0, 0}, {0, r, 0});
      }
      if (kind == "arc") {
        return Curve::elliptic_arc(f.required("center", to_point), f.required("u", to_point),
                                   f.required("v", to_point), f.required("from_turn", to_double),
                                   f.required("to_turn", to_double));
      }
      if (kind == "segment") {
        return Curve::segment(f.required("from", to_point), f.required("to", to_point));
      }
      if (kind == "polyline") {
        return Curve::polyline(f.required("points", to_points), f.optional("closed", true, to_bool));
      }
      if (kind == "wobbly") {
        return build_wobbly(f.required("center", to_point), f.required("radius", to_double),
                            f.optional("amplitude", 0.2, to_double), f.optional("lobes", 3.0, to_double),
                            f.optional("height", 0.0, to_double),
                            f.optional("height_lobes", 2.0, to_double));
      }
      if (kind == "concat") {
        const Entry& parts_entry = f.require("parts");
        const auto parts = f.parse(parts_entry, to_names);
        std::optional<Curve> joined;
        for (const auto& part : parts) {
          const auto it = std::find_if(sc.curves.begin(), sc.curves.end(),
                                       [&part](const CurveDef& c) { return c.name == part; });
          if (it == sc.curves.end()) {
            f.fail(parts_entry, "refers to curve '" + part + "' which is not defined above");
          }
          joined = joined ? Curve::concatenate(*joined, it->curve) : it->curve;
        }
        return *joined;
      }
      f.fail_section("kind", "unknown curve kind '" + kind +
                                 "' (ellipse, circle, arc, segment, polyline, wobbly, concat)");
    };
    std::optional<Curve> curve;
    try {
      curve = build();
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      f.fail_section("kind", e.what());
    }
    if (f.optional("reverse", false, to_bool)) curve = curve->reversed();
    f.finish();
    sc.curves.push_back({s->name, *curve});
  }

  for (const Section* s : by_type("homotopy")) {
    Fields f(*s, source);
    const Entry& boundary = f.require("boundary");
    const auto it = std::find_if(sc.curves.begin(), sc.curves.end(),
                                 [&](const CurveDef& c) { return c.name == boundary.value; });
    if (it == sc.curves.end()) f.fail(boundary, "unknown curve '" + boundary.value + "'");
    if (!it->curve.closed()) f.fail(boundary, "boundary curve '" + boundary.value + "' is not closed");
    const Point3 target = f.required("target", to_point);
    const double twist = f.optional("twist", 0.0, to_double);
    const double bulge = f.optional("bulge", 0.0, to_double);
    f.finish();
    sc.homotopies.push_back(
        {s->name, boundary.value, HomotopyFamily::radial(it->curve, target, twist, bulge)});
  }

  for (const Section* s : by_type("suite")) {
    Fields f(*s, source);
    SuiteDef suite;
    suite.name = s->name;
    suite.kind = f.required("kind", [](std::string_view v) {
      const auto k = parse_suite_kind(v);
      if (!k) throw std::invalid_argument("kind must be t1, t2, t3, proof or neg");
      return *k;
    });
    suite.expect = f.optional("expect", Verdict::pass, [](std::string_view v) {
      if (v == "pass") return Verdict::pass;
      if (v == "fail") return Verdict::fail;
      if (v == "inconclusive") return Verdict::inconclusive;
      throw std::invalid_argument("expect must be pass, fail or inconclusive");
    });

    const Entry& maps = f.require("maps");
    suite.maps = f.parse(maps, to_names);
    for (const auto& name : suite.maps) {
      const auto it = std::find_if(sc.maps.begin(), sc.maps.end(),
                                   [&](const MapDef& m) { return m.name == name; });
      if (it == sc.maps.end()) f.fail(maps, "unknown map '" + name + "'");
      const bool needs_monogenic = suite.kind == SuiteKind::t2 || suite.kind == SuiteKind::t3;
      if (needs_monogenic && !it->monogenic) {
        f.fail(maps, "map '" + name + "' has no F1..F4 form; " + std::string(to_string(suite.kind)) +
                         " suites check Gateaux residuals and need one");
      }
    }
    const bool uses_curves = suite.kind == SuiteKind::t1 || suite.kind == SuiteKind::neg;
    if (uses_curves) {
      const Entry& curves = f.require("curves");
      suite.curves = f.parse(curves, to_names);
      for (const auto& name : suite.curves) {
        const auto it = std::find_if(sc.curves.begin(), sc.curves.end(),
                                     [&](const CurveDef& c) { return c.name == name; });
        if (it == sc.curves.end()) f.fail(curves, "unknown curve '" + name + "'");
        if (!it->curve.closed()) f.fail(curves, "curve '" + name + "' is not closed");
      }
    } else {
      const Entry& homotopies = f.require("homotopies");
      suite.homotopies = f.parse(homotopies, to_names);
      for (const auto& name : suite.homotopies) {
        const bool known = std::any_of(sc.homotopies.begin(), sc.homotopies.end(),
                                       [&](const HomotopyDef& h) { return h.name == name; });
        if (!known) f.fail(homotopies, "unknown homotopy '" + name + "'");
      }
    }
    if (suite.kind == SuiteKind::proof) {
      suite.rho = f.required("rho", to_doubles);
      for (double r : suite.rho) {
        if (!(r > 0.0)) f.fail_section("rho", "rho values must be positive");
      }
    }
    f.finish();
    sc.suites.push_back(std::move(suite));
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path.string(), 0, "", "cannot open scenario file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path.string());
}

}  // namespace cquat
