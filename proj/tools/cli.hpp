#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvword::cli {

/// Runs one command line.  Returns 0 on success, 1 on invalid input and 2 on
/// I/O failure.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace curvword::cli
