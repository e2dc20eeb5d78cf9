#include <iostream>

#include "permmult/cli.hpp"

int main(int argc, char** argv) {
  return pmc::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
