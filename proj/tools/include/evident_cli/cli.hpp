#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace evident::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,       // parse errors, bad arguments, violated preconditions
  kEvaluation = 3,  // atom budget exceeded, inconsistent evidence
  kManifest = 4,    // a scenario expectation failed
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; on failure `out` receives only an error document.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evident::cli
