#include <iostream>

#include "oddakh/cli.hpp"

int main(int argc, char** argv) { return oddakh::run(argc, argv, std::cout, std::cerr); }
