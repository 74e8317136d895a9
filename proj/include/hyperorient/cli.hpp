#ifndef HYPERORIENT_CLI_HPP_
#define HYPERORIENT_CLI_HPP_

#include <iosfwd>

namespace hyperorient {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `hyperorient` tool. Returns 0 on success, 1 on a
/// precondition or verification failure, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperorient

#endif  // HYPERORIENT_CLI_HPP_
