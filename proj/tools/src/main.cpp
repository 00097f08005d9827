#include <iostream>

#include "stoprank/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stoprank::run_cli(args, std::cout, std::cerr);
}
