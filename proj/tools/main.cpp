#include <iostream>

#include "cosec/cli.hpp"

int main(int argc, char** argv) {
    return cosec::cli::run(argc, argv, std::cout, std::cerr);
}
