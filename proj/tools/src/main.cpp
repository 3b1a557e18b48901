#include <iostream>

#include "tsphyb_cli/commands.hpp"

int main(int argc, char** argv) {
  return tsphyb::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
