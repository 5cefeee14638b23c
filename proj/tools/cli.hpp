#ifndef SUPERLEIBNIZ_TOOLS_CLI_HPP
#define SUPERLEIBNIZ_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace superleibniz::cli {

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superleibniz::cli

#endif  // SUPERLEIBNIZ_TOOLS_CLI_HPP
