#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permdist {

// Exit codes of the permdist command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;  // invariant violation
inline constexpr int kExitUsage = 2;     // bad flags or input file
inline constexpr int kExitBudget = 3;    // exact enumeration over budget

/// Runs the command line (without the program name). Results go to `out`,
/// diagnostics and wall-clock timings to `err`, so `out` is identical for
/// identical flags.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permdist
