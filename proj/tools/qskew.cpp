#include "qskew/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qskew::run_cli(argc, argv, std::cout, std::cerr); }
