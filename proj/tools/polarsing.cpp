#include <iostream>

#include "polarsing/cli.hpp"

int main(int argc, char** argv) {
    return polarsing::run_cli(argc, argv, std::cout, std::cerr);
}
