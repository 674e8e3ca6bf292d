#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace troppic::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;    ///< input parsed but violates an invariant
inline constexpr int kMalformed = 2;  ///< unreadable input or bad usage

/// Runs one command line (without the program name) and returns the exit
/// status. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace troppic::cli
