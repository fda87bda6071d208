#include <iostream>

#include "hqmap/cli.hpp"

int main(int argc, char** argv) { return hqmap::cli::run(argc, argv, std::cout, std::cerr); }
