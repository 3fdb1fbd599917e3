#include <cstdlib>
#include <iostream>

#include "hpt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hpt::cli::run(args, std::cout, std::cerr,
                       [](const std::string& name) -> std::optional<std::string> {
                         if (const char* v = std::getenv(name.c_str())) return std::string(v);
                         return std::nullopt;
                       });
}
