#include <iostream>

#include "qahd/cli.hpp"

int main(int argc, char** argv) { return qahd::cli::main_entry(argc, argv, std::cout, std::cerr); }
