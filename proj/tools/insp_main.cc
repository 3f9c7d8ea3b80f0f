#include <iostream>
#include <string>
#include <vector>

#include "insp/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return insp::RunCli(args, std::cout, std::cerr);
}
