#include "orbitope/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return orbitope::cli::run(argc, argv, std::cout, std::cerr); }
