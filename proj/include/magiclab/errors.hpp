#pragma once

#include <stdexcept>

namespace magiclab {

// Input violates a documented schema or a type invariant (CLI exit code 3).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stated operation precondition does not hold (CLI exit code 4).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction broke one of its own postconditions; always a bug (CLI exit code 5).
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace magiclab
