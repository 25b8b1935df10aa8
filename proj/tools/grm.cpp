#include <iostream>

#include "grm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grm::run_cli(args, std::cout, std::cerr);
}
