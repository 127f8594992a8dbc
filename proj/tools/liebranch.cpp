#include "liebranch/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return liebranch::cli::run(argc, argv, std::cout, std::cerr); }
