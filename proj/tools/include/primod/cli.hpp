#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primod::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kBudgetRefusal = 2;
inline constexpr int kVerificationFailure = 3;

/// Runs the command line given the arguments after the program name.
/// All results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primod::cli
