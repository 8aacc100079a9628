#include <iostream>
#include <string>
#include <vector>

#include "biratio/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return biratio::run_command(args, std::cout, std::cerr);
}
