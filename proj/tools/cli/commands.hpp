#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace npoly::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitInternal = 4;

/// Environment variable overriding the brute-force chain cap.
inline constexpr const char* kBruteForceCapEnv = "NPOLY_BRUTE_FORCE_CAP";

/// Runs one CLI invocation. `args` holds argv including the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace npoly::cli
