#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrank {

enum ExitCode : int {
    exit_ok = 0,
    exit_parse = 2,
    exit_budget = 3,
    exit_failure = 4,
};

/// Runs `mrank` with args (without the program name). The environment
/// variable MRANK_BUDGET sets the default enumeration budget.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace mrank
