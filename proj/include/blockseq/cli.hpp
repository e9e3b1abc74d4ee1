#pragma once

#include <string>
#include <vector>

namespace blockseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitIo = 4;

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<std::string> artifacts;  // files written
  std::vector<std::string> log;        // "level: message" lines
};

// Runs one command given its tokens without the program name, e.g.
// {"extract", "--k", "3", "--in", "seq.json", "--out", "w.json"}.
CommandResult run(const std::vector<std::string>& args);

}  // namespace blockseq::cli
