#include <iostream>

#include "leavitt/cli.hpp"

int main(int argc, char** argv) {
  return leavitt::cli::run(argc, argv, std::cout, std::cerr);
}
