#include <iostream>

#include "cadef_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cadef::cli::run_command(args, std::cout, std::cerr);
}
