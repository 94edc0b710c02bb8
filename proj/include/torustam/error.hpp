#pragma once

#include <stdexcept>
#include <string>

namespace torustam {

/// Input violates an operation's precondition (bad prime, malformed field, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested computation would exceed its enumeration or matrix budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The torus has positive Q-rank, so the global invariants are not defined.
class AssumptionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family/field combination that the library does not model.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine could not reach the requested tolerance.
class ToleranceUnreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace torustam
