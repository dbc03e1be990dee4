#include <iostream>

#include "qrf/cli.hpp"

int main(int argc, char** argv) {
  return qrf::cli::main_entry(argc, argv, std::cout, std::cerr);
}
