#include <iostream>

#include "ovf/cli.hpp"

int main(int argc, char** argv) {
  return ovf::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
