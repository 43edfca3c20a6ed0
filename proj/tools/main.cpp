#include <iostream>

#include "liegrowth/cli.hpp"

int main(int argc, char** argv) {
  return liegrowth::run_cli(argc, argv, std::cout, std::cerr);
}
