#include <iostream>
#include <string>
#include <vector>

#include "alphapoly/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return alphapoly::cli_main(args, std::cout, std::cerr);
}
