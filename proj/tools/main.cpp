#include <iostream>

#include "meetless/cli.hpp"

int main(int argc, char** argv) {
  return meetless::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
