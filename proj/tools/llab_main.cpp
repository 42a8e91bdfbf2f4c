#include <iostream>
#include <string>
#include <vector>

#include "llab/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const llab::cli::RunResult res = llab::cli::run(args);
    std::cout << res.output;
    return res.exit_code;
}
