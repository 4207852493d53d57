#include <iostream>

#include "edgereg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return edgereg::run_cli(args, std::cout, std::cerr);
}
