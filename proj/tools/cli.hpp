#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpa::cli {

/// Runs the tool with `args` (without the program name). Returns the process
/// exit code: 0 success, 1 verification failure or numerical defect, 2 usage
/// or parameter error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mpa::cli
