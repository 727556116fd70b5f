#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braesslab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInputError = 2,
  kInternalError = 3,
};

// Runs one command line (without the program name) and returns the exit
// code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count used when --threads is absent: BRAESSLAB_THREADS if set to a
// positive integer, else 1.
unsigned default_threads();

}  // namespace braesslab::cli
