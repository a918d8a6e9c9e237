#include <iostream>

#include "nid/cli/run.hpp"

int main(int argc, char** argv) { return nid::cli::run(argc, argv, std::cout, std::cerr); }
