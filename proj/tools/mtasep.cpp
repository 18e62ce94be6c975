#include <iostream>

#include "mtasep/cli.hpp"

int main(int argc, char** argv) { return mtasep::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
