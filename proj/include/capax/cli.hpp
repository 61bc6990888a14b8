#pragma once

#include <ostream>
#include <span>
#include <string>

namespace capax {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `capax <args...>` (program name excluded).
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace capax
