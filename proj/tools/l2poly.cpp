#include "l2poly/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  auto r = l2poly::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
