#include <iostream>
#include <string>
#include <vector>

#include "digitop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return digitop::cli::run(args, std::cout, std::cerr);
}
