#pragma once

#include <ostream>

namespace pglind {

// Exit codes: 0 success, 2 bad arguments, 3 capacity exceeded, 4 an internal
// invariant failed (including identity or route disagreements).
inline constexpr int kExitOk = 0;
inline constexpr int kExitArgument = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitInvariant = 4;

// Environment variable naming a character-table cache file (--cache wins).
inline constexpr const char* kCacheEnvVar = "PGLIND_CHAR_CACHE";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pglind
