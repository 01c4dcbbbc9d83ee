#include <iostream>
#include <string>
#include <vector>

#include "blip/cli.hpp"

int main(int argc, char** argv) {
  return blip::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
