#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fourcalc::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2, kResourceError = 3 };

// Runs the fourcalc command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fourcalc::cli
