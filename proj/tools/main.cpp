#include <iostream>
#include <string>
#include <vector>

#include "partopus/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return partopus::run_cli(args, std::cout, std::cerr);
}
