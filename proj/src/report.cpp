#include "cquat/report.hpp"

#include <sstream>

#include "cquat/format.hpp"

namespace cquat {

ReportSection& ReportSection::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
  return *this;
}

ReportSection& ReportSection::add(std::string key, double value) {
  return add(std::move(key), format_double(value));
}

ReportSection& ReportSection::add(std::string key, std::size_t value) {
  return add(std::move(key), std::to_string(value));
}

ReportSection& ReportSection::add(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "true" : "false"));
}

ReportSection& ReportSection::add(std::string key, const Quaternion& value) {
  return add(std::move(key), format_quaternion(value));
}

ReportSection& ReportSection::add(std::string key, const std::vector<double>& values) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text += ' ';
    text += format_double(values[i]);
  }
  return add(std::move(key), std::move(text));
}

std::optional<std::string> ReportSection::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string format_quaternion(const Quaternion& q) {
  std::string text;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) text += ' ';
    text += format_double(q[k].real());
    text += ' ';
    text += format_double(q[k].imag());
  }
  return text;
}

int Report::exit_code() const {
  int code = 0;
  for (const auto& suite : suites) {
    if (suite.expectation_met()) continue;
    if (!suite.error.empty() || suite.verdict == Verdict::inconclusive) return 2;
    code = 1;
  }
  return code;
}

std::string write_report(const Report& report, bool include_timing) {
  std::ostringstream os;
  os << "format = " << kReportFormat << '\n';
  os << "scenario = " << report.scenario << '\n';
  os << "seed = " << report.seed << '\n';
  std::size_t met = 0;
  for (const auto& suite : report.suites) {
    os << "\n[suite " << suite.name << "]\n";
    os << "kind = " << to_string(suite.kind) << '\n';
    os << "expect = " << to_string(suite.expect) << '\n';
    os << "verdict = " << to_string(suite.verdict) << '\n';
    os << "expectation_met = " << (suite.expectation_met() ? "true" : "false") << '\n';
    if (!suite.error.empty()) os << "error = " << suite.error << '\n';
    if (include_timing) os << "wall_ms = " << format_double(suite.wall_ms) << '\n';
    if (suite.expectation_met()) ++met;
    for (const auto& section : suite.sections) {
      os << "\n[" << section.title() << "]\n";
      for (const auto& [k, v] : section.entries()) os << k << " = " << v << '\n';
    }
  }
  os << "\n[summary]\n";
  os << "suites = " << report.suites.size() << '\n';
  os << "expectations_met = " << met << '\n';
  os << "exit_code = " << report.exit_code() << '\n';
  return os.str();
}

std::string numeric_payload(std::string_view report_text) {
  std::string out;
  std::size_t start = 0;
  while (start < report_text.size()) {
    std::size_t end = report_text.find('\n', start);
    if (end == std::string_view::npos) end = report_text.size();
    const std::string_view line = report_text.substr(start, end - start);
    if (!line.starts_with("wall_ms")) {
      out.append(line);
      out.push_back('\n');
    }
    start = end + 1;
  }
  return out;
}

}  // namespace cquat
