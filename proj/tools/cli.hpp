#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace runprob::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDisagreement = 1,
  kUsageError = 2,
  kDomainError = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace runprob::cli
