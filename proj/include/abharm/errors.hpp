#pragma once

#include <stdexcept>
#include <string>

namespace abharm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the region where the function is defined.
struct DomainError : Error {
  using Error::Error;
};

// Gamma and friends evaluated at a non-positive integer.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// Parameter combination rejected at construction (invalid c, alpha+beta <= -1, ...).
struct ParameterError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

// Malformed input document.
struct FormatError : Error {
  using Error::Error;
};

}  // namespace abharm
