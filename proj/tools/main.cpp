#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* caps = std::getenv("TRANSLATIF_CAPS");
  return translatif::run_with_large_stack(
      [&] { return translatif::cli::run_cli(args, std::cout, std::cerr, caps); });
}
