#include <iostream>
#include <vector>

#include "binderkit/cliapp.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return binderkit::cli::run(args, std::cout, std::cerr);
}
