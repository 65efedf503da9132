#include <iostream>
#include <string>
#include <vector>

#include "apx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return apx::cli::run(args, std::cout, std::cerr);
}
