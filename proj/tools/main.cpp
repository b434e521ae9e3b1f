#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  tightspan::cli::Environment env;
  env.color = ::isatty(STDOUT_FILENO) != 0;
  return tightspan::cli::run(args, std::cout, std::cerr, env);
}
