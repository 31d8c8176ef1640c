#include <iostream>

#include "vertexid/cli.hpp"

int main(int argc, char** argv) { return vertexid::cli::run(argc, argv, std::cout, std::cerr); }
