#include <iostream>
#include <string>
#include <vector>

#include "gequiv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gequiv::cli::run(args, std::cout, std::cerr);
}
