#include <iostream>

#include "hyperorient/cli.hpp"

int main(int argc, char** argv) {
  return hyperorient::run_cli(argc, argv, std::cout, std::cerr);
}
