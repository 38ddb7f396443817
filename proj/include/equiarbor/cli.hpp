#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equiarbor {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the command-line tool; `argv` excludes the program name.
/// Primary output (JSON or a bare fraction) goes to `out`, human-readable
/// diagnostics to `err`. Returns the process exit status.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace equiarbor
