#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace exalg::cli {

/// Runs one command line (without the program name). Returns the exit status:
/// 0 on success, 1 when `verify` finds a violation or `examples` a mismatch,
/// 2 on a usage, parse or library error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One replayed worked computation.
struct ExampleResult {
  std::string label;
  std::string got;
  std::string expected;
  bool ok() const { return got == expected; }
};

/// The worked computations replayed by `examples`.
std::vector<ExampleResult> worked_examples();

}  // namespace exalg::cli
