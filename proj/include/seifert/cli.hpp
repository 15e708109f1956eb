#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seifert {

// Runs the command-line tool on the given arguments (program name not
// included). Exit codes: 0 success, 2 invalid input, 3 internal
// invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace seifert
