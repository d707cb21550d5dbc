#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planeval {

// args[0] is the program name. Exit codes: 0 success, 1 invalid document
// under `validate`, 2 schema or usage error, 3 unmet mathematical
// precondition. Errors are reported as JSON on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planeval
