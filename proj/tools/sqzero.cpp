#include <iostream>

#include "sqzero/cli.hpp"

int main(int argc, char** argv) { return sqzero::cli::run(argc, argv, std::cout, std::cerr); }
