#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prat::cli {

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and progress to `err`. Returns the process exit code:
/// 0 success, 1 internal failure, 2 bad arguments, 3 precondition violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prat::cli
