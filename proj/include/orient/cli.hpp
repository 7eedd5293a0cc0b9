#pragma once

#include <iosfwd>

namespace orient::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportFormat = 1;

/// Runs one orientseq subcommand. Exit status: 0 success, 1 precondition or
/// verification failure, 2 bad invocation or unreadable input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orient::cli
