#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isodiam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInfeasible = 3;

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out is given; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isodiam::cli
