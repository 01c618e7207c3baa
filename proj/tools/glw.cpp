#include <iostream>

#include "glw/cli.hpp"

int main(int argc, char** argv) { return glw::cli::run(argc, argv, std::cout, std::cerr); }
