#ifndef MCB_CLI_HPP_
#define MCB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace mcb::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mcb::cli

#endif // MCB_CLI_HPP_
