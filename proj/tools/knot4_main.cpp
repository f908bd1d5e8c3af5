#include <string>
#include <vector>

#include "knot4/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knot4::cli::run(args);
}
