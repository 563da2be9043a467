#pragma once

#include <ostream>

namespace sixvertex::cli {

// Exit codes: 0 success, 1 internal consistency failure, 2 usage or domain
// error, 3 numeric non-convergence.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConsistency = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;

// Parses argv and runs one subcommand. Reports go to `out` (or --out),
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sixvertex::cli
