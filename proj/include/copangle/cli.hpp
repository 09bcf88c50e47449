#ifndef COPANGLE_CLI_HPP
#define COPANGLE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace copangle {

/// Runs one CLI command (arguments without the program name) against the
/// given output and diagnostic streams. Returns the process exit code:
/// 0 on success, 1 on failed report rows or infeasible inputs, 2 on usage
/// or parse errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace copangle

#endif  // COPANGLE_CLI_HPP
