#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dweb {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUnequal = 1, kExitUsage = 2 };

/// Runs the command-line tool on the given arguments (argv[0] excluded).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dweb
