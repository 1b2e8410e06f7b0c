#include <iostream>

#include "grm_tools/cli.hpp"

int main(int argc, char** argv) {
  return grm::tools::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
