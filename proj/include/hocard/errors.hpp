#pragma once

#include <stdexcept>
#include <string>

namespace hocard {

// Invalid mathematical structure: bad Cayley table, non-strict action,
// distribution that does not sum to one, ...
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration or construction exceeded a configured budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was applied to a value of the wrong kind.
struct KindError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hocard
