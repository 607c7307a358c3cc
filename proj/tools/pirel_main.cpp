#include <iostream>

#include "pirel/cli/app.hpp"

int main(int argc, char** argv) { return pirel::cli::run(argc, argv, std::cout, std::cerr); }
