#include <iostream>

#include "ordercert_cli/cli.hpp"

int main(int argc, char** argv) { return ordercert::cli::run(argc, argv, std::cout, std::cerr); }
