#include <iostream>

#include "canonlift/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return canonlift::run_cli(args, std::cout, std::cerr);
}
