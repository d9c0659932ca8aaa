#include <iostream>

#include "hillspec_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hillspec::cli::run(args, std::cout, std::cerr);
}
