#include <iostream>

#include "mirror/cli.hpp"

int main(int argc, char** argv) {
  return mirror::main_with_args(argc, argv, std::cin, std::cout, std::cerr);
}
