#include <iostream>

#include "dbibps/cli.hpp"

int main(int argc, char** argv) { return dbibps::run_cli(argc, argv, std::cout, std::cerr); }
