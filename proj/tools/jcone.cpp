#include <iostream>
#include <string>
#include <vector>

#include "jcone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jcone::run_cli(args, std::cout, std::cerr);
}
