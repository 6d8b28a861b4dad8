#pragma once

#include <iosfwd>

namespace hoffgraph::cli {

enum ExitCode : int { success = 0, verification_failed = 1, usage_error = 2, resource_cap = 3 };

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`. Reads "-" inputs from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hoffgraph::cli
