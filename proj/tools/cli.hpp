#pragma once

#include <istream>
#include <string>
#include <vector>

namespace mixdisc::cli {

struct Outcome {
  std::string out;  // everything destined for stdout, newline-terminated
  int exit_code = 0;
};

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kInputError = 2;

/// Runs one invocation. `args` excludes the program name. `in` is read only
/// when the subcommand needs a JSON body and no --input file is given.
Outcome dispatch(const std::vector<std::string>& args, std::istream& in);

}  // namespace mixdisc::cli
