#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hornstab::cli {

/// Exit codes of every subcommand: a query answered YES, answered NO, or an
/// error (bad input, cap exceeded).
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hornstab::cli
