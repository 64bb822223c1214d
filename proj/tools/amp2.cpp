#include <iostream>

#include "amp2/cli.hpp"

int main(int argc, char** argv) { return amp2::run_cli(argc, argv, std::cout, std::cerr); }
