#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lehmus::cli {

/// Exit codes: 0 all checks passed, 1 some check failed, 2 usage or
/// input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Dispatches one invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lehmus::cli
