#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace optrig::report {

inline constexpr const char* kToolVersion = "0.1.0";

/// Parses argv (without the program name), dispatches to one subcommand, and
/// writes a single JSON report envelope to `out`. Diagnostics go to `err`.
///
/// Exit codes: 0 success, 2 bad input or validation failure, 3 failure of
/// the numerical machinery (ConvergenceFailure).
int run_subcommand(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace optrig::report
