#include <iostream>

#include "subdepth/cli.hpp"

int main(int argc, char** argv) {
  return subdepth::cli::run_cli(argc, argv, std::cout, std::cerr, std::cin);
}
