#include <iostream>

#include "renner/cli.hpp"

int main(int argc, char** argv) { return renner::cli::main(argc, argv, std::cout, std::cerr); }
