#include <iostream>
#include <string>
#include <vector>

#include "mfc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return mfc::cli::run(args, std::cin, std::cout, std::cerr);
}
