#include <iostream>

#include "budgetagg_cli/cli.hpp"

int main(int argc, char** argv) {
  return budgetagg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
