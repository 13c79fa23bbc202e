#pragma once

#include <iosfwd>

namespace arcstab::cli {

/// Exit codes: 0 no violation found, 1 explicit violation, 2 error.
inline constexpr int kExitClean = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

/// Entry point of the command-line tool, writing the report to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace arcstab::cli
