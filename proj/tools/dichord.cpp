#include <iostream>

#include "dichord/cli.hpp"

int main(int argc, char** argv) {
  return dichord::cli_main(argc, argv, std::cin, std::cout, std::cerr);
}
