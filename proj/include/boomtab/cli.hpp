#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boomtab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConfig = 3;

// Runs the command line (args exclude the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boomtab
