#pragma once

#include <stdexcept>
#include <string>

namespace tev {

/// Raised when caller-supplied parameters violate a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal identity fails (non-integral degree, failed
/// divisibility, unexpected support). Always a bug, never bad input.
class InvariantBreach : public std::logic_error {
 public:
  explicit InvariantBreach(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tev
