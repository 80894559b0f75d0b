#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catcolim {

// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // property violation or invalid input semantics
  kExitUnknown = 2,    // bound-limited indeterminacy
  kExitUsage = 3,      // parse or usage error
};

// Runs the tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catcolim
