#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratroot {

enum ExitCode : int {
  kExitOk = 0,            // computed, whatever the decision
  kExitInputError = 1,    // malformed file or arguments
  kExitPrecondition = 2,  // e.g. reducible f with --mode irreducible
  kExitInternal = 3,      // an internal assertion failed
};

// Entry point of the ratroot tool. args[0] is the program name. Reports go
// to out as JSON, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratroot
