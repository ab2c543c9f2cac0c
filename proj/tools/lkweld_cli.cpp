#include <iostream>

#include "lkweld/cli.hpp"

int main(int argc, char** argv) { return lkweld::run_cli(argc, argv, std::cout, std::cerr); }
