#include <iostream>

#include "nld/cli.hpp"

int main(int argc, char** argv) {
    return nld::cli_main(argc, argv, std::cout, std::cerr);
}
