#include <iostream>
#include <string>
#include <vector>

#include "clenum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return clenum::run_cli(args, std::cin, std::cout, std::cerr);
}
