#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto parsed = vcgroup::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return vcgroup::cli::run(*parsed.config, std::cout, std::cerr);
}
