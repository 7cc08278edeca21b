#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finspace::cli {

enum ExitCode { kPass = 0, kFailure = 1, kInputError = 2, kBudgetExceeded = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finspace::cli
