#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = mixdisc::cli::dispatch(args, std::cin);
  std::cout << outcome.out << std::flush;
  return outcome.exit_code;
}
