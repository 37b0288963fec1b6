#pragma once

// Subcommand front end. Exit codes: 0 success, 1 domain error (JSON on out),
// 2 usage error (text on err).

#include <iosfwd>
#include <string>
#include <vector>

namespace resichain::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace resichain::cli
