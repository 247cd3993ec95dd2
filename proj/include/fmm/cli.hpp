// The `fmm` command line, callable in-process for tests.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fmm {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitInput = 3,
};

/// `args` excludes the program name, e.g. {"verify", "makarov99"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmm
