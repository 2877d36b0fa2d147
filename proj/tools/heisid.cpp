#include <iostream>

#include "heisid/cli.hpp"

int main(int argc, char** argv) {
  return heisid::run_cli(argc, argv, std::cout, std::cerr);
}
