#include <iostream>
#include <string>
#include <vector>

#include "monodepth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monodepth::run_cli(args, std::cout, std::cerr);
}
