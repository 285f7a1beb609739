#pragma once

// Command-line frontend.  Kept in the library (with injectable streams) so
// the tests can drive it without spawning processes; tools/main.cpp is a
// two-line wrapper.

#include <iosfwd>
#include <string>
#include <vector>

namespace quiverkit {

// args excludes the program name.  Returns the process exit code:
// 0 success, 1 domain error or failed verification, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverkit
