#include <iostream>
#include <string>
#include <vector>

#include "ado/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ado::run_cli(args, std::cout, std::cerr);
}
