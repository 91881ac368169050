#include <iostream>

#include "nilcommute/cli.hpp"

int main(int argc, char** argv) { return nilcommute::run_cli(argc, argv, std::cout, std::cerr); }
