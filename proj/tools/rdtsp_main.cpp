#include <iostream>

#include "rdtsp/cli.hpp"

int main(int argc, char** argv) { return rdtsp::cli::dispatch(argc, argv, std::cout, std::cerr); }
