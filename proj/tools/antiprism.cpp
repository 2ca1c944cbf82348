#include <iostream>

#include "antiprism/cli.hpp"

int main(int argc, char** argv) { return antiprism::cli::main_entry(argc, argv, std::cout, std::cerr); }
