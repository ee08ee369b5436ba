#include <iostream>
#include <string>
#include <vector>

#include "evc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return evc::cli::run(args, std::cout, std::cerr, std::cin);
}
