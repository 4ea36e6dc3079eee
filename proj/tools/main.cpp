#include <iostream>
#include <vector>

#include "binv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return binv::cli_dispatch(args, std::cout, std::cerr);
}
