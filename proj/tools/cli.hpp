#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace buoyancy::cli {

/// Exit codes: 0 success, 1 solver error, 2 usage error.
inline constexpr int kExitSolverError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace buoyancy::cli
