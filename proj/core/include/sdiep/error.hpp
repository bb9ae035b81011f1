#pragma once

#include <stdexcept>
#include <string>

namespace sdiep {

/// Raised when input text (a spectrum list or a matrix file) cannot be parsed.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an iterative routine exhausts its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Precondition violations (bad sizes, out-of-range values) throw
// std::invalid_argument.

} // namespace sdiep
