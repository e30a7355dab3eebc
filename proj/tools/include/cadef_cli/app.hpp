#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cadef::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Parses `args` (without the program name), runs the subcommand and writes
/// one JSON report to `out`. Diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cadef::cli
