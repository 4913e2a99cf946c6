#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtriad {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 input error, 3 size guard exceeded.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtriad
