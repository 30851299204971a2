#pragma once

// Property suites behind `hermk3 verify` and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

namespace hermk3 {

struct VerificationReport {
  std::string check_id;
  bool pass = false;
  double residual = 0;
  double tolerance = 0;
  std::int64_t runtime_ms = 0;
  std::string details;
};

struct VerifyOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 20;
  int radius = 0;  // 0: automatic
  int order = 2;
};

/// "lattice", "theta", "qexp", "invariants", "group", "fibration", "all".
const std::vector<std::string>& verify_suites();

/// Reports sorted by check_id. Throws InvalidArgument on an unknown suite.
std::vector<VerificationReport> run_suite(const std::string& suite, const VerifyOptions& opts);

/// JSON array; runtime_ms only when `timings` is set so that output is reproducible.
std::string reports_json(const std::vector<VerificationReport>& reports, bool timings);

}  // namespace hermk3
