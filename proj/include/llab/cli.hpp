#pragma once

#include <string>
#include <vector>

namespace llab::cli {

// Exit codes: 0 success / verdict passed, 1 verdict failed, 2 input error
// (bad arguments, malformed files, violated preconditions), 3 resource
// limit hit. Output is the full JSON report (or help text).
struct RunResult {
    int exit_code = 0;
    std::string output;
};

RunResult run(const std::vector<std::string>& args);

} // namespace llab::cli
