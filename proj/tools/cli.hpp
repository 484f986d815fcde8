#ifndef RIESZ_TOOLS_CLI_HPP
#define RIESZ_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace riesz::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli

#endif  // RIESZ_TOOLS_CLI_HPP
