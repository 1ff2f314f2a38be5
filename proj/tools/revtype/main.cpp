#include <iostream>

#include "revtype/cli.hpp"

int main(int argc, char** argv) { return revtype::cli::run(argc, argv, std::cout, std::cerr); }
