#include <iostream>

#include "macic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return macic::cli::run(args, std::cout, std::cerr);
}
