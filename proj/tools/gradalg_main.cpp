#include <iostream>
#include <vector>

#include "gradalg/json_io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gradalg::run_cli(args, std::cout, std::cerr);
}
