#include <iostream>

#include "orient/cli.hpp"

int main(int argc, char** argv) { return orient::cli::run(argc, argv, std::cout, std::cerr); }
