#include <iostream>

#include "endslab/cli.hpp"

int main(int argc, char** argv) {
  return endslab::cli_main(argc, argv, std::cout, std::cerr);
}
