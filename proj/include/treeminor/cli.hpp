#pragma once

#include <iosfwd>

namespace treeminor {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeGuard = 3;

// Size guards, overridable through the environment.
inline constexpr const char* kAtlasCapEnv = "TREEMINOR_ATLAS_CAP";   // default 10
inline constexpr const char* kOracleCapEnv = "TREEMINOR_ORACLE_CAP";  // default 8

// Entry point of the `treeminor` tool. File arguments use the text tree
// format; "-" reads `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace treeminor
