#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rclean::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kPrecondition = 3,
    kBudget = 4,
    kVerification = 5,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rclean::cli
