#ifndef SUTARSKI_TOOLS_CLI_HPP
#define SUTARSKI_TOOLS_CLI_HPP

#include <iosfwd>

namespace sutarski::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Default counterexample directory for `fuzz` when --out is not given.
inline constexpr const char* kCounterexampleDirEnv = "SUTARSKI_COUNTEREXAMPLE_DIR";

/// Runs one command line. Exit codes: 0 success, 1 invalid witness or
/// counterexample found, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sutarski::cli

#endif  // SUTARSKI_TOOLS_CLI_HPP
