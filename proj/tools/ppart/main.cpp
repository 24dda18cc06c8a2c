#include <iostream>

#include "ppart/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ppart::cli::run(args, std::cout, std::cerr);
}
