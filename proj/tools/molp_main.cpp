#include <iostream>
#include <string>
#include <vector>

#include "molp/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return molp::run_cli(args, std::cout, std::cerr);
}
