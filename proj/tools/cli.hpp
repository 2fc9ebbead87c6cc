#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nalg::cli {

enum ExitCode { ok = 0, failed = 1, undetermined = 2, input_error = 3 };

/// Runs one command line (args excludes the program name). Reports go to
/// out, diagnostics and timing to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nalg::cli
