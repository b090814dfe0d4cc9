#include <iostream>

#include "partstab/cli.hpp"

int main(int argc, char **argv) { return partstab::run_cli(argc, argv, std::cout, std::cerr); }
