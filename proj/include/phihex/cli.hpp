#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace phihex::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Runs one command. `args` excludes the program name.
///
///   verify [--vertex q,r,c] [--side P/Q] [--digits D] [--json]
///   scan   --radius N [--side P/Q] [--json]
///   fib    --max N [--digits D] [--rounding truncate|half-even] [--json]
///   assess --ratio X [--digits D] [--json]
///   render --out FILE [--vertex q,r,c] [--side P/Q] [--digits D] [--no-labels]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phihex::cli
