#include <iostream>

#include "probdist/cli.hpp"

int main(int argc, char** argv) {
    return probdist::run_cli(argc, argv, std::cout, std::cerr);
}
