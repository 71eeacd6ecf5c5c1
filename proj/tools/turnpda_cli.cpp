#include <iostream>

#include "turnpda/cli.hpp"

int main(int argc, char** argv) {
  return turnpda::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
