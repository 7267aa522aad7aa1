#pragma once

#include <stdexcept>
#include <string>

namespace kron {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a coefficient cannot be mapped into the requested domain,
/// e.g. a rational whose denominator vanishes modulo p.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a search or computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kron
