#ifndef INSP_CLI_H_
#define INSP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace insp {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitInternal = 4;

// Runs one subcommand (solve, bound, join, verify, gen). `args` excludes the
// program name. Documents go to `out`, diagnostics and trace lines to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace insp

#endif  // INSP_CLI_H_
