#include <iostream>
#include <string>
#include <vector>

#include "ratroot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ratroot::run_command(args, std::cout, std::cerr);
}
