#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bausteine/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env;
  if (const char* v = std::getenv("BAUSTEINE_MAX_STEPS")) env = v;
  return bausteine::cli::run(args, std::cin, std::cout, std::cerr, env, isatty(STDIN_FILENO) != 0);
}
