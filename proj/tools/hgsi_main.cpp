#include <iostream>

#include "hgsi/cli.hpp"

int main(int argc, char** argv) { return hgsi::run_cli(argc, argv, std::cout, std::cerr); }
