#include <iostream>

#include "apl/cli.hpp"

int main(int argc, char** argv) {
  return apl::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
