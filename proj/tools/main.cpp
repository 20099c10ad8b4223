#include <iostream>
#include <string>
#include <vector>

#include "ifsir/cli.hpp"

int main(int argc, char* argv[]) {
  return ifsir::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
