#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cquat/harness.hpp"

namespace {

int run(const std::string& path, const std::string& out, const std::string& suite,
        const std::optional<double>& tol, const std::vector<std::size_t>& refinements,
        const std::optional<std::uint64_t>& seed) {
  cquat::Scenario scenario = cquat::load_scenario(path);
  if (tol) {
    if (!(*tol > 0.0)) throw std::invalid_argument("--tol must be positive");
    scenario.settings.tol_theorem = *tol;
  }
  if (!refinements.empty()) {
    for (std::size_t i = 0; i < refinements.size(); ++i) {
      if (refinements[i] < 2 || (i && refinements[i] <= refinements[i - 1])) {
        throw std::invalid_argument("--refinements must be increasing and at least 2");
      }
    }
    scenario.settings.refinements = refinements;
  }
  if (seed) scenario.settings.seed = *seed;

  cquat::RunOptions options;
  if (suite != "all") options.only = cquat::parse_suite_kind(suite);

  const cquat::Report report = cquat::run_scenario(scenario, options);
  const std::string text = cquat::write_report(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << text;
  }
  for (const auto& s : report.suites) {
    std::cerr << s.name << ": " << cquat::to_string(s.verdict) << " (expected "
              << cquat::to_string(s.expect) << ")\n";
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check the integral theorems on a scenario file"};
  std::string path;
  std::string out;
  std::string suite = "all";
  std::optional<double> tol;
  std::vector<std::size_t> refinements;
  std::optional<std::uint64_t> seed;

  app.add_option("scenario", path, "Scenario file")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out, "Report path (stdout when omitted)");
  app.add_option("--suite", suite, "Suite kind to run")
      ->check(CLI::IsMember({"t1", "t2", "t3", "proof", "neg", "all"}));
  app.add_option("--tol", tol, "Theorem tolerance");
  app.add_option("--refinements", refinements, "Comma-separated refinement schedule")
      ->delimiter(',');
  app.add_option("--seed", seed, "Seed for sampled probe points and directions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(path, out, suite, tol, refinements, seed);
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return 2;
  }
}
