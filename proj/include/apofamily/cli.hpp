#ifndef APOFAMILY_CLI_HPP
#define APOFAMILY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace apofamily {

// Runs the command line given as argv-style tokens (program name excluded).
// Writes results to `out` and diagnostics to `err`. Returns the process exit
// code: 0 success, 1 internal error or oracle failure, 2 usage error,
// 3 paper-deviation under --strict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apofamily

#endif
