#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace edgepart::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,       // NO / UNSAT / not found / verification false
  kInputError = 2,
  kBudgetError = 3,
  kVerifierFailure = 4,
};

/// Runs one command. args excludes the program name. Graph and formula inputs
/// come from a file argument, or from `in` when the argument is "-" or absent.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace edgepart::cli
