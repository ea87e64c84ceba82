#include <iostream>
#include <string>
#include <vector>

#include "hornstab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hornstab::cli::run(args, std::cout, std::cerr);
}
