#include <iostream>

#include "bdom/cli.hpp"

int main(int argc, char** argv) { return bdom::cli::run_cli(argc, argv, std::cout, std::cerr); }
