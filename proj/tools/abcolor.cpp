#include <iostream>
#include <string>
#include <vector>

#include "abcolor/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto report = abcolor::run_cli(args, std::cout, std::cerr);
    return report.exit_code;
}
