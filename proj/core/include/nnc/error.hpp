#pragma once

#include <stdexcept>
#include <string>

namespace nnc {

// Caller supplied arguments that violate a documented precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A tensor or node count exceeds the library's hard limits.
class SizeError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Numerical failure: non-PD matrices, inconsistent information measures,
// optimisation problems without a feasible point.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoFeasiblePointError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace nnc
