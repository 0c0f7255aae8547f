#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace kuniv::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// One-line human summary.
  std::string detail;
  /// Deterministic machine-readable evidence (no timings).
  nlohmann::json payload;
  double seconds = 0.0;
};

struct Summary {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> items;

  bool all_passed() const;
  /// Criteria ids, verdicts and payloads; byte-identical across runs with
  /// the same seed.
  std::string report_json() const;
  /// PASS/FAIL lines with timings.
  void print_table(std::ostream& os) const;
};

struct Options {
  std::uint64_t seed = 20240601;
  /// Called after each criterion, e.g. to stream progress.
  std::function<void(const CriterionResult&)> on_result;
};

/// Runs acceptance criteria 1..12.  Criterion 12 reruns 1..11 and a set of
/// CLI invocations and compares their reports byte for byte.
Summary run_acceptance_suite(const Options& options = {});

}  // namespace kuniv::acceptance
