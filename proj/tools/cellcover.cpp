#include <iostream>
#include <string>
#include <vector>

#include "cellcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cellcover::run_command(args, std::cout, std::cerr);
}
