#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zinbiel::cli {

/// Exit codes: 0 success (checks pass, audits complete), 1 a checked law is
/// violated, 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kInputError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zinbiel::cli
