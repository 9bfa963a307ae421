#pragma once

#include <stdexcept>
#include <string>

namespace costab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated domain restriction (bad indices, negative
/// supplements, games where the grand coalition loses, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A caller-side precondition failed in a way that callers may want to tell
/// apart from an ordinary negative answer (e.g. a payoff vector that is not
/// an imputation for the structure it is checked against).
struct PreconditionError : DomainError {
  using DomainError::DomainError;
};

/// The instance exceeds a configured enumeration or table budget.
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace costab
