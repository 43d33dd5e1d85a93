#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symtrap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoResult = 1;  // a search ran to its ceiling without an answer
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symtrap::cli
