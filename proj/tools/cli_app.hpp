#pragma once

#include <string>
#include <vector>

namespace levysb::cli {

/// Runs the command line tool; returns the process exit code.
/// Exit codes: 0 success / checks passed, 1 internal failure or failed
/// check, 2 config parse error, 3 I/O error, 4 unknown identity,
/// 5 size guard tripped.
int run(const std::vector<std::string>& args);

}  // namespace levysb::cli
