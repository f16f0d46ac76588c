#pragma once

#include <stdexcept>
#include <string>

namespace nazgsa {

/// Raised when an argument violates an operation's precondition.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative method (quadrature doubling, continued fraction,
/// golden-section search) fails to reach its tolerance.
class NonConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computed quantity breaks an inequality that must hold by
/// construction. Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) {
        throw ValidationError(message);
    }
}

}  // namespace nazgsa
