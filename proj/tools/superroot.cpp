#include "superroot/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return superroot::run_cli(argc, argv, std::cout, std::cerr); }
