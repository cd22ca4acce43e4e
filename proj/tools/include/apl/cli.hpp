#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apl::cli {

/// Exit statuses of the apl tool.
enum exit_status : int { ok = 0, checks_failed = 1, bad_input = 2 };

/// Runs the command line `args` (program name first). Reports go to `out`,
/// human-readable summaries and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apl::cli
