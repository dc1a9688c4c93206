#pragma once

#include <stdexcept>
#include <string>

namespace bianchi {

/// An input violates the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity that the formulas guarantee to be integral (or otherwise
/// constrained) came out wrong. Raised instead of silently rounding.
class ConformanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace bianchi
