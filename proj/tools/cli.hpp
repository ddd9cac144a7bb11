#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgeham::cli {

// Exit codes.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitProbablyNo = 2;
inline constexpr int kExitLibraryError = 3;
inline constexpr int kExitIoError = 4;
inline constexpr int kExitUsage = 64;

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgeham::cli
