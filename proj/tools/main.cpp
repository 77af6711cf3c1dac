#include <iostream>
#include <string>
#include <vector>

#include "symmetria/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return symmetria::cli_run(args, std::cout, std::cerr);
}
