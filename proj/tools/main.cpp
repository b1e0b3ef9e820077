#include <iostream>

#include "mspin/cli.hpp"

int main(int argc, char** argv) {
  return mspin::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
