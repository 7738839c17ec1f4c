#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return mvz::cli::run(argc, argv, std::cout); }
