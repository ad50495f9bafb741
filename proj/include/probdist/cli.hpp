#ifndef PROBDIST_CLI_HPP
#define PROBDIST_CLI_HPP

#include <iosfwd>

namespace probdist {

// Exit codes of the command-line tool, also listed in --help.
namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kUsage = 1;
inline constexpr int kUnknownDistribution = 2;
inline constexpr int kBadParameter = 3;
inline constexpr int kBadTable = 4;
inline constexpr int kDomainError = 5;
inline constexpr int kNumericFailure = 6;
}  // namespace exit_code

// Parses argv and executes one command, writing results to `out` and
// warnings/diagnostics to `err`. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace probdist

#endif
