#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropcalc {

/// Exit codes: 0 success, 1 usage error or unbalanced input to check-balanced,
/// 2 parse error, 3 validation error, 4 dimension mismatch, 5 failed precondition, 6 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropcalc
