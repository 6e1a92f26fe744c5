#include <iostream>
#include <string>
#include <vector>

#include "fraclab_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fraclab::cli::dispatch(args, std::cin, std::cout, std::cerr);
}
