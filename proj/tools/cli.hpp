#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace treespec::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputFormat = 2,
  kVerificationFailed = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace treespec::cli
