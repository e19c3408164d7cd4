#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace easycat {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // a verification or acceptance check failed
  kExitUsage = 2,
  kExitLimit = 3,        // a budget or size cap was hit
  kExitInput = 4,        // malformed partition text, unknown names, ...
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace easycat
