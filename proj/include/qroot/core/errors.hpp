#ifndef QROOT_CORE_ERRORS_HPP
#define QROOT_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qroot {

/// Raised on contract violations by the caller: mismatched contexts, missing
/// assignments, zero denominators at construction, malformed input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when exact arithmetic cannot proceed (inverting zero, inexact
/// division, exponent overflow).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qroot

#endif  // QROOT_CORE_ERRORS_HPP
