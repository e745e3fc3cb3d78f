#include <iostream>

#include "nfpc/cli.hpp"

int main(int argc, char** argv) {
  return nfpc::run_cli(argc, argv, std::cout, std::cerr);
}
