#include <iostream>

#include "fourcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fourcalc::cli::run(args, std::cout, std::cerr);
}
