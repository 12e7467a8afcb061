#include <iostream>

#include "germ/cli.hpp"

int main(int argc, char** argv) {
    return germ::run_cli(argc, argv, std::cout, std::cerr);
}
