#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ppx/report.hpp"

namespace ppx {

/// Exit codes of the `ppx` command.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
};

/// Exit code for a finished verification run.
ExitCode report_exit_code(const Report& rep);

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ppx
