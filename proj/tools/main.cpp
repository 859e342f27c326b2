#include <iostream>
#include <string>
#include <vector>

#include "mcb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mcb::cli::run(args, std::cout, std::cerr);
}
