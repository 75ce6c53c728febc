#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return sparse_evolve::run_cli(argc, argv, std::cout, std::cerr); }
