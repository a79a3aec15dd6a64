#include <iostream>

#include "subschur/commands.hpp"

int main(int argc, char** argv) {
  return subschur::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
