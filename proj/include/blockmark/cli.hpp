#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blockmark::cli {

/// Runs one CLI invocation (args exclude the program name) and returns the
/// process exit code: 0 on success, 2 on usage, validation, or I/O errors.
/// Metric lines go to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace blockmark::cli
