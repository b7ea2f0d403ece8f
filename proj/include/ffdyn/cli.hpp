#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffdyn::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,  // oracle mismatch, or a (q, c) without maximal cycle
  kUsageError = 2,
};

/// Runs the ffdyn command line (args excludes the program name).
/// Commands: analyze, graph, scan, bounds, fixed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffdyn::cli
