#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return nmctl::run(argc, argv, std::cout, std::cerr); }
