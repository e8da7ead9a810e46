#pragma once

#include <ostream>

namespace pwl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;   // parse or validation failure
inline constexpr int kExitNotInvertible = 3;  // NonInjective or Degenerate
inline constexpr int kExitUsage = 64;

// Entry point of the pwlinv tool, with injectable streams for testing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pwl::cli
