#include <iostream>
#include <string>
#include <vector>

#include "blockseq/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const blockseq::cli::CommandResult r = blockseq::cli::run(args);
  for (const auto& line : r.log) (r.exit_code == 0 ? std::cout : std::cerr) << line << '\n';
  return r.exit_code;
}
