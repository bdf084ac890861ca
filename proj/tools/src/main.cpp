#include <iostream>

#include "symwalk_cli/cli.hpp"

int main(int argc, char** argv) { return symwalk::cli::run(argc, argv, std::cout, std::cerr); }
