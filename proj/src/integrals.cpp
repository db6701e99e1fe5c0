#include "cquat/integrals.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>

namespace cquat {

namespace {

// Fixed chunking keeps the summation order independent of the thread count.
constexpr std::size_t kChunk = 4096;

std::vector<Quaternion> evaluate_vertices(const Polyline& line, const GenericMap& g) {
  const std::size_t count = line.points.size();
  std::vector<Quaternion> values(count);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      try {
        values[j] = g(line.points[j]);
      } catch (const EvaluationError& e) {
        throw line.params.empty() ? e : e.at_parameter(line.params[j]);
      }
    }
  };
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  const unsigned workers = std::thread::hardware_concurrency();
  if (chunks <= 1 || workers <= 1) {
    run(0, count);
    return values;
  }
  std::vector<std::future<void>> jobs;
  jobs.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(count, begin + kChunk);
    jobs.push_back(std::async(std::launch::async, run, begin, end));
  }
  // Surface the first failure in vertex order.
  for (auto& job : jobs) job.get();
  return values;
}

Quaternion sample(const std::vector<Quaternion>& values, std::size_t j, Rule rule) {
  if (rule == Rule::left_endpoint) return values[j];
  return (values[j] + values[j + 1]) / 2.0;
}

template <typename Term>
Quaternion chunked_sum(std::size_t segments, Term term) {
  Quaternion total;
  for (std::size_t begin = 0; begin < segments; begin += kChunk) {
    const std::size_t end = std::min(segments, begin + kChunk);
    Quaternion partial;
    for (std::size_t j = begin; j < end; ++j) partial += term(j);
    total += partial;
  }
  return total;
}

IntegralResult integrate_with(const Curve& curve, const QuadratureSpec& q,
                              const auto& integrator) {
  q.validate();
  std::vector<std::size_t> ns = q.schedule;
  if (ns.empty()) ns = {q.n / 2, q.n};
  IntegralResult result;
  Quaternion previous;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const Quaternion value = integrator(curve.materialize(ns[i]));
    if (i > 0) result.error_estimate = norm_e(value - previous);
    previous = value;
    result.value = value;
    result.n = ns[i];
  }
  return result;
}

}  // namespace

std::string_view to_string(Rule rule) {
  return rule == Rule::trapezoid ? "trapezoid" : "left_endpoint";
}

void QuadratureSpec::validate() const {
  if (n < 2) throw std::invalid_argument("quadrature resolution must be at least 2");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 2) {
      throw std::invalid_argument("refinement schedule entries must be at least 2");
    }
    if (i > 0 && schedule[i] <= schedule[i - 1]) {
      throw std::invalid_argument("refinement schedule must be strictly increasing");
    }
  }
}

Quaternion integrate_polyline(const Polyline& line, const GenericMap& g, Side side,
                              Rule rule) {
  if (line.points.size() < 2) return {};
  const auto values = evaluate_vertices(line, g);
  const GeneratorTriple& gen = g.generators();
  return chunked_sum(line.segments(), [&](std::size_t j) {
    const Quaternion dz = embed(line.points[j + 1] - line.points[j], gen);
    const Quaternion psi = sample(values, j, rule);
    return side == Side::right ? dz * psi : psi * dz;
  });
}

Quaternion integrate_polyline_componentwise(const Polyline& line, const GenericMap& g,
                                            Side side, Rule rule) {
  if (line.points.size() < 2) return {};
  const ComponentFunctions parts = component_functions(g);
  const std::size_t count = line.points.size();

  // Six real Stieltjes-type sums per basis index: U dx, U dy, U dz, V dx, V dy, V dz.
  std::array<std::array<double, 6>, 4> sums{};
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<double> u(count), v(count);
    for (std::size_t j = 0; j < count; ++j) {
      try {
        u[j] = parts.u[k](line.points[j]);
        v[j] = parts.v[k](line.points[j]);
      } catch (const EvaluationError& e) {
        throw line.params.empty() ? e : e.at_parameter(line.params[j]);
      }
    }
    for (std::size_t j = 0; j + 1 < count; ++j) {
      const Point3 d = line.points[j + 1] - line.points[j];
      const double us = rule == Rule::trapezoid ? (u[j] + u[j + 1]) / 2.0 : u[j];
      const double vs = rule == Rule::trapezoid ? (v[j] + v[j + 1]) / 2.0 : v[j];
      sums[k][0] += us * d.x;
      sums[k][1] += us * d.y;
      sums[k][2] += us * d.z;
      sums[k][3] += vs * d.x;
      sums[k][4] += vs * d.y;
      sums[k][5] += vs * d.z;
    }
  }

  const GeneratorTriple& gen = g.generators();
  const Quaternion i2 = gen.i2();
  const Quaternion i3 = gen.i3();
  const Complex imag{0.0, 1.0};
  Quaternion total;
  for (std::size_t k = 0; k < 4; ++k) {
    const Quaternion ek = Quaternion::basis(static_cast<int>(k) + 1);
    const Quaternion with_i2 = side == Side::right ? i2 * ek : ek * i2;
    const Quaternion with_i3 = side == Side::right ? i3 * ek : ek * i3;
    total += ek * Complex{sums[k][0]} + with_i2 * Complex{sums[k][1]} +
             with_i3 * Complex{sums[k][2]};
    total += imag * (ek * Complex{sums[k][3]} + with_i2 * Complex{sums[k][4]} +
                     with_i3 * Complex{sums[k][5]});
  }
  return total;
}

IntegralResult integrate(const Curve& curve, const GenericMap& g, Side side,
                         const QuadratureSpec& q) {
  return integrate_with(curve, q, [&](const Polyline& line) {
    return integrate_polyline(line, g, side, q.rule);
  });
}

IntegralResult integrate_componentwise_oracle(const Curve& curve, const GenericMap& g,
                                              const QuadratureSpec& q, Side side) {
  return integrate_with(curve, q, [&](const Polyline& line) {
    return integrate_polyline_componentwise(line, g, side, q.rule);
  });
}

Refinement refine_until(const Curve& curve, const GenericMap& g, Side side, double tol,
                        std::span<const std::size_t> schedule, Rule rule) {
  if (!(tol > 0.0)) throw std::invalid_argument("refine_until: tol must be positive");
  if (schedule.empty()) throw std::invalid_argument("refine_until: empty schedule");
  QuadratureSpec check{rule, schedule.front(), {schedule.begin(), schedule.end()}};
  check.validate();

  Refinement out;
  Quaternion previous =
      integrate_polyline(curve.materialize(std::max<std::size_t>(1, schedule.front() / 2)),
                         g, side, rule);
  for (std::size_t n : schedule) {
    const Quaternion value = integrate_polyline(curve.materialize(n), g, side, rule);
    RefinementRow row{n, value, norm_e(value), norm_e(value - previous)};
    out.table.push_back(row);
    out.result = {value, n, row.delta};
    previous = value;
    if (row.delta < tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

std::vector<std::size_t> doubling_schedule(unsigned lo, unsigned hi) {
  std::vector<std::size_t> out;
  for (unsigned p = lo; p <= hi; ++p) out.push_back(std::size_t{1} << p);
  return out;
}

}  // namespace cquat
