#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bibliolens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitAnalysis = 3;

// `args` excludes the program name. Results go to `out` unless --out is
// given; diagnostics go to `err`. Reads BIBLIOLENS_CONFIG for defaults.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bibliolens::cli
