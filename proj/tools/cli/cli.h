#ifndef PETRUSKA_TOOLS_CLI_H_
#define PETRUSKA_TOOLS_CLI_H_

#include <ostream>

namespace petruska::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the petruska tool. Documents go to --out files or to out;
// diagnostics and the one-line verdict go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace petruska::cli

#endif  // PETRUSKA_TOOLS_CLI_H_
