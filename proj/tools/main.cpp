#include <iostream>
#include <string>
#include <vector>

#include "optrig/report/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return optrig::report::run_subcommand(args, std::cout, std::cerr);
}
