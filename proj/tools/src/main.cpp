#include <iostream>
#include <string>
#include <vector>

#include "hypexp_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hypexp::cli::cli_main(args, std::cout, std::cerr, std::cin);
}
