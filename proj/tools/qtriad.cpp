#include <iostream>

#include "qtriad/cli.hpp"

int main(int argc, char** argv) {
  return qtriad::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
