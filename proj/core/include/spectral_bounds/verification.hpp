#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace spectral_bounds {

struct VerifyOptions {
  /// Oracle intervals across the narrowest width (1 / oracle-h on the unit scale).
  int oracle_nodes = 128;
  /// Boundary mesh resolution for curved shapes.
  int resolution = 512;
  /// Run only these check ids; empty runs everything.
  std::vector<std::string> only;
};

struct CheckInfo {
  std::string id;
  int number = 0;
  std::string title;
};

struct CheckResult {
  std::string id;
  int number = 0;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// The acceptance checks in run order.
const std::vector<CheckInfo>& acceptance_checks();

/// Multiplier applied to oracle-based tolerances when the oracle runs coarser
/// than the default 128 intervals: max(1, (128 / nodes)^2).
double oracle_tolerance_scale(int oracle_nodes);

/// Runs the selected checks. Oracle results are shared between checks in one call.
/// Throws InputError for an unknown id in options.only.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

/// {"passed": bool, "checks": [{id, number, passed, seconds, detail}, ...]}
std::string verification_to_json(const std::vector<CheckResult>& results);

}  // namespace spectral_bounds
