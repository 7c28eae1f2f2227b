#include <iostream>

#include "lpa/cli.hpp"

int main(int argc, char** argv) {
  return lpa::run_cli(argc, argv, std::cout, std::cerr);
}
