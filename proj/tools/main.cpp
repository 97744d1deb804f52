#include <iostream>

#include "distlap/cli.hpp"

int main(int argc, char** argv) { return distlap::cli::run(argc, argv, std::cout, std::cerr); }
