#include <iostream>
#include <string>
#include <vector>

#include "bcf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bcf::run(args, std::cout, std::cerr);
}
