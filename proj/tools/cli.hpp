#pragma once

#include <istream>
#include <ostream>

namespace wordrep::cli {

/// Exit codes: 0 success / property holds, 1 definitive no, 2 usage, parse
/// or resource error.
enum ExitCode : int { kOk = 0, kNo = 1, kError = 2 };

/// Runs the `wordrep` command line against the given streams. "-" as a file
/// argument reads from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace wordrep::cli
