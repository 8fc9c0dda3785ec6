#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace teacheval::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Reports go to `out`
// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teacheval::cli
