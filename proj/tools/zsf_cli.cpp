#include <iostream>
#include <string>
#include <vector>

#include "zsf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zsf::cli::run(args, std::cout, std::cerr);
}
