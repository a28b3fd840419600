#pragma once

#include <stdexcept>
#include <string>

namespace bwcap {

/// Invalid input: a letter of height 0, a non-permutation, a bad CLI argument.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured budget (word count, permanent size, exponent cap) would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed form produced a value that must be integral but is not. Always a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Series division with no exact x-power cancellation.
class DivisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series square root requested on a branch other than constant term 1.
class UnsupportedBranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested external data (OEIS snapshot or fetch) is not available.
class UnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bwcap
