#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfkit::cli {

// Exit codes: 0 success, 1 verification mismatch, 2 input or usage error.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfkit::cli
