#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace selfloop::cli {

/// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selfloop::cli
