#include <iostream>

#include "catcolim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return catcolim::run(args, std::cout, std::cerr);
}
