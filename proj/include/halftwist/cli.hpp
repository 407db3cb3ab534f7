#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halftwist {

// Dispatches one command.  args excludes the program name.  Exit codes:
// 0 success, 1 mathematical failure or discrepancy, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace halftwist
