#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blip::cli {

// Exit statuses of the command-line tool.
enum Status : int {
  kOk = 0,
  kUsage = 1,
  kInputOutput = 2,
  kExpression = 3,
};

// Run the tool as if invoked with `args` (args[0] is the program name).
// Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blip::cli
