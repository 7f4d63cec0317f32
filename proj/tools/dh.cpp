#include <iostream>
#include <string>
#include <vector>

#include "dh/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dh::cli::run(args, std::cout, std::cerr);
}
