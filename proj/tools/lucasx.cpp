#include <iostream>
#include <string>
#include <vector>

#include "lucasx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lucasx::cli::run_args(args, std::cout, std::cerr);
}
