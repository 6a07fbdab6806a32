#include <iostream>
#include <string>
#include <vector>

#include "lahyper/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lahyper::run_cli(args, std::cout, std::cerr);
}
