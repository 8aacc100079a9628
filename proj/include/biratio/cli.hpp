#ifndef BIRATIO_CLI_HPP
#define BIRATIO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace biratio {

/// Exit codes of run_command.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitVerdictFailure = 2 };

/// Runs one subcommand; `args` excludes the program name. The JSON report
/// goes to `out` unless --out names a file. Errors go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biratio

#endif  // BIRATIO_CLI_HPP
