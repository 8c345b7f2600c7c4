#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yetter::cli {

/// Runs one command line (without the program name). Returns 0 on success, 2
/// when a verdict reports a violation, 1 on errors; usage errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yetter::cli
