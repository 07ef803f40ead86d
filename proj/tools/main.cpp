#include <iostream>

#include "treeminor/cli.hpp"

int main(int argc, char** argv) {
  return treeminor::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
