#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bfv {

/// Exit codes of `solve`.
enum ExitCode : int { kYes = 0, kNo = 1, kInputError = 2, kRefused = 3 };

/// Runs the `bfv` command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bfv
