#include <iostream>
#include <string>
#include <vector>

#include "s5artin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return s5artin::run_cli(args, std::cout, std::cerr);
}
