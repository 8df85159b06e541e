#include <iostream>

#include "spatialkit/cli.hpp"

int main(int argc, char** argv) {
  return spatialkit::run_cli(argc, argv, std::cout, std::cerr);
}
