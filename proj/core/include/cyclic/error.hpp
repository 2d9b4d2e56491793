#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclic {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Argument outside an operation's documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A property guaranteed by the mathematics failed to hold. Indicates a library bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Domain errors: well-formed requests that have no realization.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Minimal realization requested for a cycle whose signature ends in 0.
class NotRealizable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Minimal realization requested for a rotation cycle (descent number 1).
class RotationCycle : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegreeTooSmall : public DomainError {
 public:
  using DomainError::DomainError;
};

class ShiftOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Which admissibility condition a fix or dep vector violates.
enum class Clause {
  kLength,            // wrong number of components
  kNegative,          // some component < 0
  kSum,               // fix: components do not sum to k-1
  kLastPositive,      // fix: n_q == 0
  kBelowSignature,    // fix: n_i < sig_i for some i
  kNotMonotone,       // dep: w_i > w_{i+1}
  kLastNotQ,          // dep: w_{k-1} != q
  kOutOfRange,        // dep: a component exceeds q
  kMissingMarked,     // dep: a marked index is absent
};

const char* to_string(Clause clause) noexcept;

class NotAdmissible : public DomainError {
 public:
  NotAdmissible(Clause clause, const std::string& detail);
  Clause clause() const noexcept { return clause_; }

 private:
  Clause clause_;
};

/// Enumeration refused because k^q exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclic
