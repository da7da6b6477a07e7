#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace saf::cli {

/// Runs one command line (without the program name). Answers go to `out`,
/// diagnostics to `err`. Returns 0 on success and 2 on any operational
/// failure; a "NO" answer is still a success.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin);

}  // namespace saf::cli
