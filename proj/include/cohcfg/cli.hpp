#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohcfg {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitClaimFailed = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohcfg
