#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "supercong/selftest.hpp"

namespace supercong::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kToolVersion = "0.1.0";

/// Parses `args` (without the program name) and runs the subcommand. Reports
/// go to `out` (or --out), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Same as the selftest subcommand with caller-supplied options.
int run_selftest_command(const SelftestOptions& options, const std::string& format,
                         std::ostream& out);

}  // namespace supercong::cli
