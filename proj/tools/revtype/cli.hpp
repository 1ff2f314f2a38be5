#pragma once

#include <iosfwd>

namespace revtype::cli {

/// Parses the command line and runs one subcommand. The report goes to the
/// -o file when given and to `out` otherwise; the human-readable summary goes
/// to `out` when the report is in a file and to `err` otherwise. Returns the
/// process exit code (0 success or definite result, 1 usage or input error,
/// 2 inconclusive).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace revtype::cli
