#include <iostream>

#include "hyperent/cli/app.hpp"

int main(int argc, char** argv) {
    return hyperent::cli::run_cli(argc, argv, std::cout, std::cerr);
}
