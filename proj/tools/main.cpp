#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "datashare/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* no_color = std::getenv("NO_COLOR");
  bool color = ::isatty(STDOUT_FILENO) && !(no_color && *no_color);
  return datashare::cli::run(args, {std::cout, std::cerr, color});
}
