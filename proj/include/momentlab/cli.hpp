#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace momentlab {

/// Runs the command-line tool. `args` excludes the program name.
/// Exit codes: 0 success, 1 mathematical error (structured JSON on `out`), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace momentlab
