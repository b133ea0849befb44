#include "skm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return skm::run_cli(argc, argv, std::cout, std::cerr); }
