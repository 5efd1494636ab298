#include <iostream>

#include "gl11/cli.hpp"

int main(int argc, char** argv) {
  return gl11::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
