#pragma once

// Command-line front end. `run_cli` parses an argument vector (without the
// program name), executes one subcommand and returns the exit code together
// with what would be written to stdout and stderr.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 invalid input,
// 3 a resource cap was exceeded.

#include <string>
#include <vector>

namespace schur {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitCapExceeded = 3;

struct CliOutput {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

CliOutput run_cli(const std::vector<std::string>& args);

// Entry point used by the `schur` executable; writes to stdout and stderr.
int run(int argc, char** argv);

}  // namespace schur
