#include <iostream>

#include "tilab/cli.hpp"

int main(int argc, char** argv) {
  return tilab::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
