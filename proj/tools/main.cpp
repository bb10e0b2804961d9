#include <iostream>

#include "dyckpop/cli.hpp"

int main(int argc, char** argv) { return dyckpop::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
