#include <iostream>
#include <string>
#include <vector>

#include "homnambu/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homnambu::run_cli(args, std::cout, std::cerr);
}
