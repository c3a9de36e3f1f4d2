#include <iostream>

#include "polypol/cli.hpp"

int main(int argc, char** argv) { return polypol::run_cli(argc, argv, std::cout, std::cerr); }
