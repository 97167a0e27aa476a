#include "commgraph/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return commgraph::cli::run(argc, argv, std::cout, std::cerr); }
