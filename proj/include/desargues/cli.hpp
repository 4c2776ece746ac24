#pragma once

#include <string>
#include <vector>

namespace desargues {

struct RunResult {
  int exit_code;       // 0 verified, 1 usage/input error, 2 verdict failure
  std::string output;  // text for stdout (empty when --out redirected it)
};

// Runs one toolkit command; args exclude the program name. Never throws:
// every failure becomes an error report and a nonzero exit code.
RunResult run_cli(const std::vector<std::string>& args);

}  // namespace desargues
