#include <iostream>

#include "digon/cli.hpp"

int main(int argc, char** argv) { return digon::cli::dispatch(argc, argv, std::cout, std::cerr); }
