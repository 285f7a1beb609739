#include <iostream>
#include <string>
#include <vector>

#include "quiverkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quiverkit::run_cli(args, std::cout, std::cerr);
}
