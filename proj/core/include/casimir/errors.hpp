#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Anything that should map to CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BracketError : public NumericalError {
 public:
  BracketError(const std::string& what, double lo, double hi)
      : NumericalError(what + " [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]"),
        lo(lo), hi(hi) {}
  double lo, hi;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double bound)
      : NumericalError(what + " (achieved bound " + std::to_string(bound) +
                       ")"),
        bound(bound) {}
  double bound;
};

class BranchAmbiguity : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace casimir
