#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace germcalc {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kPrecondition = 2,
  kGenericity = 3,
  kIdentityFailed = 4,
};

/// Runs one germcalc invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace germcalc
