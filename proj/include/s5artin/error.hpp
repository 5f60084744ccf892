#pragma once

#include <stdexcept>
#include <string>

namespace s5artin {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (wrong degree, wrong group, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by zero and similar field-arithmetic failures.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Root of unity whose order does not divide the fixed conductor 120.
class UnsupportedRootError : public Error {
 public:
  using Error::Error;
};

/// The prime divides the discriminant.
class RamifiedPrimeError : public Error {
 public:
  using Error::Error;
};

/// Computed data contradicts a structural invariant (non-character input,
/// failed eigenspace split, non-integral multiplicity).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace s5artin
