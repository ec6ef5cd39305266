#pragma once

// Command-line front end. Subcommands: graphs, build, verify, transfer,
// chain, suite. Exit codes: 0 when every check passes, 1 when a check fails
// or a computation is refused, 2 on usage or input errors.

#include <iosfwd>

namespace dynbax {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dynbax
