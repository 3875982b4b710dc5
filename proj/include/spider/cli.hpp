#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spider::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 validation error, 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spider::cli
