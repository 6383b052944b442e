#pragma once

#include <stdexcept>
#include <string>

namespace equidim {

// Raised when a caller breaks an operation's precondition (mismatched rings,
// saturation by zero, non-monomial oracle input, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Verification oracles refuse instead of truncating when the input is too big.
class CostGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace equidim
