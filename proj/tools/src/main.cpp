#include <iostream>

#include "evident_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return evident::cli::run(args, std::cout, std::cerr);
}
