#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ewb::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuardRail = 3;

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// warnings, progress and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ewb::cli
