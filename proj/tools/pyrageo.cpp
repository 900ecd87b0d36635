#include <iostream>
#include <string>
#include <vector>

#include "pyrageo/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return pyrageo::cli::run(args, std::cout, std::cerr);
}
