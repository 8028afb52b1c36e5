#include <iostream>

#include "ambi/cli.hpp"

int main(int argc, char** argv) { return ambi::cli::run(argc, argv, std::cout, std::cerr); }
