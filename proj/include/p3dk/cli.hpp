// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p3dk::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kFormat = 3,  // bad container, IntegrityError, RangeError
  kKey = 4,
};

/// Parses and dispatches one command line. `args[0]` is the program name.
/// Diagnostics go to `err` as a single line.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run(int argc, char **argv);

}  // namespace p3dk::cli
