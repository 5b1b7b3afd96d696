#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfclust::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name. The report (or other
/// primary output) goes to out unless --out is given; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perfclust::cli
