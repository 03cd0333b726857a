#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input error (reported as one line starting with "error: ").

#include <ostream>
#include <string>
#include <vector>

namespace hopfrep::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInputError = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hopfrep::cli
