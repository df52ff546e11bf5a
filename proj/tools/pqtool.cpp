#include <iostream>

#include "pq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pq::run_cli(args, std::cout, std::cerr);
}
