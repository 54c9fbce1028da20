#include "comb/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return comb::cli::run(argc, argv, std::cout, std::cerr); }
