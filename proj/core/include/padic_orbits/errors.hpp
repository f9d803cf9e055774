#pragma once

#include <stdexcept>

namespace padic_orbits {

/// Raised when a computed state violates an arithmetic invariant that can
/// only fail through a bug, never through bad input.
class internal_inconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a root-search frontier exceeds its configured cap.
class frontier_overflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace padic_orbits
