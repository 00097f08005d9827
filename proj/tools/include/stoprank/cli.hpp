#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stoprank {

/// Runs the stoprank command line. `args` excludes the program name.
/// Returns the process exit status; errors go to `err` as a single line
/// `error: <kind>: <message>`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stoprank
