#include <iostream>

#include "sixvertex/cli/app.hpp"

int main(int argc, char** argv) { return sixvertex::cli::run(argc, argv, std::cout, std::cerr); }
