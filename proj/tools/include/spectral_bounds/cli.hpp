#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spectral_bounds::cli {

enum ExitCode : int { ok = 0, verify_failed = 1, input_error = 2, solver_error = 3 };

/// Runs `spectral-bounds` with argv[1..] in `args`. Reports go to `out`,
/// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses an oracle spacing such as "1/64" or "0.015625" into intervals per unit length.
int oracle_nodes_from_spacing(const std::string& text);

}  // namespace spectral_bounds::cli
