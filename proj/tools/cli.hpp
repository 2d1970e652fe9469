#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace substkit::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 computation or data error, 2 usage error, 3 failed theorem check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace substkit::cli
