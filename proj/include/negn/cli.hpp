#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace negn {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kIdentityFailed = 1, kUsage = 2 };

/// Runs the `negn` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace negn
