#include <iostream>

#include "jcirc/cli.hpp"

int main(int argc, char** argv) {
    return jcirc::cli::main_with_args(argc, argv, std::cout, std::cerr);
}
