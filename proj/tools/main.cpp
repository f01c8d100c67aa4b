#include <iostream>

#include "mlpd/cli.hpp"

int main(int argc, char** argv) {
  return mlpd::run_cli(argc, argv, std::cout, std::cerr);
}
