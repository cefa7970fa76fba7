#include "vfsig/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return vfsig::cli::run_cli(argc, argv, std::cout, std::cerr); }
