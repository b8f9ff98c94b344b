#pragma once

#include <iosfwd>

namespace neu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs the `neu` command line. argv[0] is the program name. Never throws;
/// failures map to kExitUsage or kExitDomain with a diagnostic on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace neu::cli
