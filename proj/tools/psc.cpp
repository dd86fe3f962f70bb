#include <iostream>
#include <string>
#include <vector>

#include "psc/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return psc::cli::run(args, std::cout, std::cerr);
}
