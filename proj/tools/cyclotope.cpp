#include <iostream>

#include "cyclotope/cli.hpp"

int main(int argc, char** argv) { return cyclotope::cli::main(argc, argv, std::cout, std::cerr); }
