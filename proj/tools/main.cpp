#include <iostream>

#include "diophant/cli.hpp"

int main(int argc, char** argv) {
  return diophant::run(argc, argv, std::cout, std::cerr);
}
