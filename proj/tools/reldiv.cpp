#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "reldiv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  reldiv::CliEnvironment env;
  env.stdin_is_terminal = isatty(STDIN_FILENO) != 0;
  env.color = isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
  return reldiv::run_cli(args, std::cin, std::cout, std::cerr, env);
}
