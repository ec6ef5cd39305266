#include <iostream>

#include "dynbax/cli.hpp"

int main(int argc, char** argv) { return dynbax::run_cli(argc, argv, std::cout, std::cerr); }
