#include "qfock/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qfock::run_cli(argc, argv, std::cout, std::cerr); }
