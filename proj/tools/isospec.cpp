#include <iostream>
#include <string>
#include <vector>

#include "isospec/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return isospec::cli::run(args, std::cout, std::cerr);
}
