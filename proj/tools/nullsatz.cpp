#include <iostream>

#include "nullsatz/cli.hpp"

int main(int argc, char** argv) { return nullsatz::run_cli(argc, argv, std::cout, std::cerr); }
