#include <iostream>
#include <string>
#include <vector>

#include "permlens/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return permlens::cli::run(args, std::cout, std::cerr);
}
