#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vertexid::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Regular output goes to `out`, diagnostics and mismatches to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vertexid::cli
