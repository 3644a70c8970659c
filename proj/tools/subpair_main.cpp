#include <iostream>
#include <string>
#include <vector>

#include "subpair/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return subpair::run_cli(args, std::cout, std::cerr);
}
