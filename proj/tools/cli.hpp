#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linlayout::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// valid layout or report; 1 violation or certificate; 2 usage or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linlayout::cli
