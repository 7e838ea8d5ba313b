#pragma once

#include <iosfwd>

namespace cusptrees::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidity = 3;
inline constexpr int kExitGuard = 4;

// Environment override for the enumeration guard (a positive integer).
inline constexpr const char* kGuardEnvVar = "CUSPTREES_ENUM_GUARD";
inline constexpr int kDefaultEnumGuard = 10;

// Parses and dispatches one invocation. Writes results to `out`,
// diagnostics to `err`, and returns one of the exit codes above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cusptrees::cli
