#pragma once

#include <stdexcept>
#include <string>

namespace crys {

// Malformed input: bad group spec, bad vector syntax, inconsistent dimensions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Root data that fail the structural checks.
class InvalidDatum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The truncation cap was reached before a claim could be certified.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crys
