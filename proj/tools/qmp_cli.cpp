#include <iostream>

#include "qmp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qmp::cli::run(args, std::cout, std::cerr);
}
