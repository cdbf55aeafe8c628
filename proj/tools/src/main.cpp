#include <iostream>

#include "coxa_tools/cli.hpp"

int main(int argc, char** argv) {
  return coxa::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
