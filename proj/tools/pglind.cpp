#include <iostream>

#include "pglind/cli.hpp"

int main(int argc, char** argv) { return pglind::run_cli(argc, argv, std::cout, std::cerr); }
