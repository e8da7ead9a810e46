#include <iostream>

#include "pwl/cli.hpp"

int main(int argc, char** argv) { return pwl::cli::run(argc, argv, std::cout, std::cerr); }
