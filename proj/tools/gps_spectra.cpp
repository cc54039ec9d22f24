#include <iostream>
#include <string>
#include <vector>

#include "gps/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gps::cli::run(args, std::cout, std::cerr);
}
