#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace magiclab {

// Full command-line entry point, separated from main() for testability.
// args excludes the program name. Exit codes: 0 ok, 2 usage, 3 schema,
// 4 precondition, 5 invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace magiclab
