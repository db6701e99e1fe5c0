#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cquat/quaternion.hpp"
#include "cquat/scenario.hpp"

namespace cquat {

inline constexpr std::string_view kReportFormat = "cquat-report/1";

/// One "[title]" block of "key = value" lines. Numbers are written as
/// shortest round-trip decimals; a Quaternion is written as its eight real
/// coordinates (Re c1, Im c1, ..., Re c4, Im c4).
class ReportSection {
 public:
  explicit ReportSection(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  ReportSection& add(std::string key, std::string value);
  ReportSection& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  ReportSection& add(std::string key, double value);
  ReportSection& add(std::string key, std::size_t value);
  ReportSection& add(std::string key, bool value);
  ReportSection& add(std::string key, const Quaternion& value);
  ReportSection& add(std::string key, const std::vector<double>& values);

  /// First value stored under key, if any.
  std::optional<std::string> get(std::string_view key) const;

 private:
  std::string title_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct SuiteReport {
  std::string name;
  SuiteKind kind = SuiteKind::t1;
  Verdict expect = Verdict::pass;
  Verdict verdict = Verdict::pass;
  /// Set when a configuration or evaluation problem produced the verdict.
  std::string error;
  double wall_ms = 0.0;
  std::vector<ReportSection> sections;

  bool expectation_met() const { return verdict == expect; }
};

struct Report {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<SuiteReport> suites;

  /// 0 when every suite met its expectation; 2 when an unmet suite ended
  /// INCONCLUSIVE or with an error; 1 otherwise.
  int exit_code() const;
};

/// Serializes the report. Timing appears only on lines starting with
/// "wall_ms"; everything else is the deterministic numeric payload.
std::string write_report(const Report& report, bool include_timing = true);

/// Drops the "wall_ms" lines.
std::string numeric_payload(std::string_view report_text);

std::string format_quaternion(const Quaternion& q);

}  // namespace cquat
