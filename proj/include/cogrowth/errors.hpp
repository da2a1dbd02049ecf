#pragma once

#include <stdexcept>
#include <string>

namespace cogrowth {

// Base class for all user-facing failures raised by the library.
struct CogrowthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed group specification (bad JSON shape, inconsistent backend data,
// non-invertible generator image, rank < 2, ...).
struct GroupSpecError : CogrowthError {
  using CogrowthError::CogrowthError;
};

// Ball enumeration exceeded the configured element budget.
struct BallBudgetExceeded : CogrowthError {
  explicit BallBudgetExceeded(std::size_t budget)
      : CogrowthError("ball enumeration exceeded budget of " + std::to_string(budget) +
                      " distinct elements"),
        budget(budget) {}
  std::size_t budget;
};

// Brute-force word enumeration exceeded the configured word budget.
struct EnumerationBudgetExceeded : CogrowthError {
  explicit EnumerationBudgetExceeded(std::size_t budget)
      : CogrowthError("word enumeration exceeded budget of " + std::to_string(budget) + " words"),
        budget(budget) {}
  std::size_t budget;
};

// Integer-matrix backend overflowed its fixed-width entries.
struct OverflowError : CogrowthError {
  using CogrowthError::CogrowthError;
};

// Unreadable, unwritable, or structurally malformed artifact file.
struct IoError : CogrowthError {
  using CogrowthError::CogrowthError;
};

}  // namespace cogrowth
