#ifndef FIBERBOUND_TOOLS_CLI_HPP
#define FIBERBOUND_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fiberbound::cli {

enum ExitCode : int {
  ok = 0,
  bound_violated = 1,
  input_error = 2,
  internal_error = 3,
  precondition_failed = 4,
};

/// Runs the command line (without the program name). Everything the tool
/// prints goes to out / err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fiberbound::cli

#endif  // FIBERBOUND_TOOLS_CLI_HPP
