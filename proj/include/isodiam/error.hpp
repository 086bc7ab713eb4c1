#pragma once

#include <stdexcept>
#include <string>

namespace isodiam {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, violated precondition or out-of-range argument.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A subset enumeration would exceed its configured budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, unsigned long long required, unsigned long long budget)
      : Error(what), required_(required), budget_(budget) {}

  unsigned long long required() const { return required_; }
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

/// A search or construction cannot start from a feasible state.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace isodiam
