#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mulab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Runs one command line (args[0] is the program name). Normal output goes to `out`
/// unless --out is given; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mulab::cli
