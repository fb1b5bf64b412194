#include <iostream>
#include <string>
#include <vector>

#include "zeta/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return rzeta::cli::run(args, std::cout, std::cerr);
}
