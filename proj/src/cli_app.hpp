#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cypres::cli {

// Runs one CLI invocation (args exclude the program name) writing to the
// given streams. Exit codes: 0 success, 1 checked-property violation,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cypres::cli
