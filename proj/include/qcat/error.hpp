#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

// Bad user-supplied data: unknown ids, extent mismatches, malformed files.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration or closure blew through its cap. Callers that run
// verifications catch this and downgrade to an INCONCLUSIVE verdict.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qcat
