#include <iostream>

#include "egosim/cli.hpp"

int main(int argc, char** argv) {
  return egosim::cli::run(argc, argv, std::cout, std::cerr);
}
