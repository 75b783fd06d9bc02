#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "octowitt/serialize.hpp"

namespace octowitt {

struct VerifyConfig {
  int n_max = 2;
  int samples = 100;
  std::uint64_t seed = 42;
};

struct CheckFailure {
  std::string id;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string name;
  std::size_t checks_run = 0;
  std::vector<CheckFailure> failures;  // sorted by id
  double wall_ms = 0.0;
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<SuiteResult> suites;  // fixed order

  [[nodiscard]] std::size_t total_checks() const;
  [[nodiscard]] std::size_t total_failures() const;
  [[nodiscard]] bool passed() const { return total_failures() == 0; }
  [[nodiscard]] const SuiteResult* find(const std::string& name) const;
};

/// Names of all suites in run order.
const std::vector<std::string>& suite_names();

/// Runs every identity suite for n = 1..n_max. Each suite draws from its own
/// seeded stream, so results do not depend on suite order.
VerificationReport run_verification(const VerifyConfig& config);

/// Wall times are only included when include_timings is set; without them the
/// output is byte-identical for a fixed config.
Json report_to_json(const VerificationReport& report, bool include_timings = false);

}  // namespace octowitt
