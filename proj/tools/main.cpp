#include <iostream>
#include <string>
#include <vector>

#include "gapower/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return gapower::run_cli(args, std::cout, std::cerr);
}
