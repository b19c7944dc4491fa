#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fmw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

// Runs one command line (without the program name). Reports go to `out`
// (or the --out file), diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmw::cli
