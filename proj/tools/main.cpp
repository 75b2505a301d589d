#include "binsum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return binsum::run(argc, argv, std::cout, std::cerr); }
