#include <iostream>

#include "xtropy/cli.hpp"

int main(int argc, char** argv) {
    return xtropy::run_cli(argc, argv, std::cout, std::cerr);
}
