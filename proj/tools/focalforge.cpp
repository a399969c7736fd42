#include "focalforge/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return focalforge::cli::run(argc, argv, std::cout, std::cerr);
}
