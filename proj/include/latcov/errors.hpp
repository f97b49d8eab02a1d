#pragma once

#include <stdexcept>
#include <string>

namespace latcov {

// Thrown when a constructed object or an operation argument violates a
// documented invariant. `invariant()` carries the invariant's name
// (e.g. "NotClosed", "NotSymmetric", "OutOfSlab") and `piece_index()`
// the offending boundary piece where that is meaningful (-1 otherwise).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string invariant, const std::string& message, int piece_index = -1)
      : std::runtime_error(invariant + ": " + message),
        invariant_(std::move(invariant)),
        piece_index_(piece_index) {}

  const std::string& invariant() const { return invariant_; }
  int piece_index() const { return piece_index_; }

 private:
  std::string invariant_;
  int piece_index_;
};

// Thrown when an iterative solver fails to reach its acceptance thresholds.
// The message reports the final residuals.
class SolveError : public std::runtime_error {
 public:
  explicit SolveError(const std::string& message)
      : std::runtime_error("NoConvergence: " + message) {}
};

}  // namespace latcov
