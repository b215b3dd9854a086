#include <iostream>

#include "freecomm/cli.hpp"

int main(int argc, char** argv) { return freecomm::run_cli(argc, argv, std::cout, std::cerr); }
