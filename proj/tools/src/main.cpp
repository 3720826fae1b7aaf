#include <iostream>

#include "crn_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return crn::cli::run(args, std::cout, std::cerr);
}
