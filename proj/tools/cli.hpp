#ifndef LANDEN_TOOLS_CLI_HPP
#define LANDEN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace landen::cli {

/// Runs one CLI job.  Exit codes: 0 success, 1 parse error, 2 domain
/// violation, 3 precision/iteration budget exhausted (partial results are
/// still written to `out`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landen::cli

#endif  // LANDEN_TOOLS_CLI_HPP
