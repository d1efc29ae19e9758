#include <iostream>

#include "polystab/cli.hpp"

int main(int argc, char** argv) {
    return polystab::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
