#include <iostream>
#include <string>
#include <vector>

#include "mstep/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mstep::cli::run(args, std::cin, std::cout, std::cerr);
}
