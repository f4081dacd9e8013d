#include <iostream>

#include "dctc/cli/dispatch.hpp"

int main(int argc, char** argv) { return dctc::cli::run(argc, argv, std::cout, std::cerr); }
