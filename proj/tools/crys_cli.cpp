#include <iostream>

#include "crys/cli.hpp"

int main(int argc, char** argv) { return crys::cli_main(argc, argv, std::cout, std::cerr); }
