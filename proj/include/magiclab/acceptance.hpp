#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace magiclab {

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // one-line evidence or the first failure
};

// Runs the nine release criteria in order, streaming one "PASS"/"FAIL" line
// per criterion to log when given. Used by both the acceptance binary and
// the `suite` subcommand.
std::vector<CriterionOutcome> run_acceptance_suite(std::ostream* log = nullptr);

}  // namespace magiclab
