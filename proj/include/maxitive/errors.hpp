// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace maxitive {

/// Malformed or out-of-range input (unknown element, subset outside the
/// point set, unparseable value).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A structural requirement on the arguments does not hold, e.g. the value
/// lattice is not distributive when a singular part is requested.
class PreconditionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration was asked for beyond the supported bounds.
class BudgetError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A candidate object (e.g. a set-function table) fails the defining axioms.
/// `witness()` names the offending input in human-readable form.
class ValidationError : public std::invalid_argument {
public:
  ValidationError(const std::string& what, std::string witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

private:
  std::string witness_;
};

/// An internal cross-check between two independent computations failed.
/// Seeing this means a theorem instance or an implementation route is wrong.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InvariantViolation(message);
}

} // namespace maxitive
