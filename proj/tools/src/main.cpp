#include <iostream>

#include "cyclic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyclic::cli::run(args, std::cout, std::cerr);
}
