#include <iostream>
#include <string>
#include <vector>

#include "h2v/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return h2v::cli::run(args, std::cout, std::cerr);
}
