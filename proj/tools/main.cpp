#include <iostream>

#include "budgeted/cli.hpp"

int main(int argc, char** argv) { return budgeted::run_cli(argc, argv, std::cout, std::cerr); }
