#include <iostream>

#include "drat_cli.hpp"

int main(int argc, char** argv) {
  return drat::cli::run(argc, argv, std::cout, std::cerr);
}
