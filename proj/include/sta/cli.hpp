#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Entry point of the `sta` tool. `args` excludes the program name.
/// Subcommands: list, run, experiment, demo-axesion, spot-check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sta::cli
