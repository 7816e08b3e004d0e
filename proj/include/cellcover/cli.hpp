#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellcover {

/// Runs one command-line invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors and 2 on usage errors; every
/// failure writes a single diagnostic line to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellcover
