#include <iostream>
#include <string>
#include <vector>

#include "eqgb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eqgb::run_cli(args, std::cout, std::cerr);
}
