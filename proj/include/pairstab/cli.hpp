#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairstab::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kInputError = 2 };

/// Runs one CLI invocation (args excludes the program name). Verdict JSON goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairstab::cli
