#pragma once

#include <stdexcept>
#include <string>

namespace blockseq {

// Malformed input: out-of-range indices, duplicate values, inverted bounds.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but violates a documented hypothesis (e.g. n <= (k-1)^2).
class PreconditionFailed : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// An oracle refused to run because the instance exceeds its size guard.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric predicate could not be decided within tolerance.
class Indeterminate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blockseq
