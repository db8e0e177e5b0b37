#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibrekit {

/// Runs the command-line tool on `args` (without the program name). The
/// report goes to `out`, diagnostics and timing to `err`. Returns the exit
/// code: 0 success, 1 malformed input, 2 precondition or hypothesis
/// failure, 3 resource budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibrekit
