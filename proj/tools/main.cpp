#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return pinched::run_cli(argc, argv, std::cout, std::cerr); }
