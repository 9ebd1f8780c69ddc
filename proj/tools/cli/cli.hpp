#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace colortool::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. args excludes the program name. Payload goes to out,
// diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace colortool::cli
