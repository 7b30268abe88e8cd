#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modpart::cli {

// Runs the command line given by args (without the program name), writing
// data to `out` and diagnostics to `err`. Returns the process exit code:
// 0 on success and, for verify subcommands, only when nothing is violated.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace modpart::cli
