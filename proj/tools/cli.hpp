#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hullx::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name) and returns the exit
/// code. Human-readable output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hullx::cli
