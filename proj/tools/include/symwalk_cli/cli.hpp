#pragma once

#include <iosfwd>

namespace symwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Parses argv and runs one command. Results go to `out` unless --output
/// names a file, which is then replaced atomically; diagnostics go to `err`.
/// Returns 0 on success, 2 for usage or input errors, 3 when an internal
/// consistency check fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symwalk::cli
