#include <iostream>
#include <string>
#include <vector>

#include "enumkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return enumkit::run_cli(args, std::cout, std::cerr);
}
