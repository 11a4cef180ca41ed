#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nimforge {

enum ExitCode { kExitOk = 0, kExitDisagreement = 1, kExitResourceLimit = 2, kExitBadInput = 3 };

/// Runs one command line (program name excluded) and returns the exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nimforge
