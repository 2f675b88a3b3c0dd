#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgpet {

/// Exit codes of cli_main. A hit BFS cap counts as a failed verification.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalid = 3;

/// Runs the command line tool. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgpet
