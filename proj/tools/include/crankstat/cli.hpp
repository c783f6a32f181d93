#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crankstat::cli {

enum ExitCode : int { all_pass = 0, any_fail = 1, usage_error = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crankstat::cli
