#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmis {

/// Runs the command line `hmis <args...>` (args excludes the program name).
/// Returns 0 on success, 1 on verification failure or solver error, 2 on
/// usage error. Primary output goes to `out`; the resolved configuration,
/// warnings and errors go to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmis
