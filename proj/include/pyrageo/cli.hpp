#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pyrageo::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code. Reports go to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pyrageo::cli
