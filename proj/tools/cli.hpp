#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sandgraph::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 when every check passes, 1 on a failed check or violated
/// hypothesis, 2 on usage or input errors.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sandgraph::cli
