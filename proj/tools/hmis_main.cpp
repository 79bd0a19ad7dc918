#include <iostream>
#include <string>
#include <vector>

#include "hmis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hmis::cli_dispatch(args, std::cout, std::cerr);
}
