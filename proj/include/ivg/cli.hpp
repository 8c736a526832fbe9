#pragma once

#include <istream>
#include <string>
#include <vector>

namespace ivg::cli {

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 positive verdict, 1 negative verdict with certificate,
/// 2 input error, 3 internal inconsistency.
enum Exit : int { positive = 0, negative = 1, input_error = 2, inconsistency = 3 };

/// Runs one command. `args` excludes the program name; `in` is read only
/// when a command needs a graph and no path was given.
Result run(const std::vector<std::string>& args, std::istream& in);

}  // namespace ivg::cli
