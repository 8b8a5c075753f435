#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resolvekit {

inline constexpr const char* kToolVersion = "resolvekit 0.1.0";

enum ExitCode : int {
  kExitOk = 0,             // computed, or verified resolving
  kExitNotResolving = 1,   // witness printed
  kExitUsage = 2,          // usage or input format error
  kExitBudget = 3,         // limit or size cap reached
};

// Runs one command. args excludes the program name; "-" in any file slot
// means `in` (input) or `out` (output).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace resolvekit
