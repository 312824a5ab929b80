#include <iostream>

#include "gct/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gct::cli_run(args, std::cin, std::cout, std::cerr);
}
