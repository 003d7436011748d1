#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace marks::cli {

enum ExitCode : int { ok = 0, input_error = 2, unsupported = 3, validation_failure = 4 };

/// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace marks::cli
