#pragma once

#include <iosfwd>

namespace sparse_evolve {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitOther = 1;
inline constexpr int kExitArgument = 2;
inline constexpr int kExitDegeneracy = 3;
inline constexpr int kExitInfeasible = 4;

// Runs `sparse-evolve` with the given arguments, writing results to out and
// diagnostics to err. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sparse_evolve
