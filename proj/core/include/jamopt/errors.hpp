#pragma once

#include <stdexcept>
#include <string>

namespace jamopt {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A SystemParams field violates its constraint. Carries the first violated
// field so a frontend can point at the offending flag.
class InvalidParam : public Error {
 public:
  InvalidParam(std::string field, double value, std::string constraint)
      : Error(field + " = " + std::to_string(value) + " violates " + constraint),
        field_(std::move(field)),
        value_(value),
        constraint_(std::move(constraint)) {}

  const std::string& field() const noexcept { return field_; }
  double value() const noexcept { return value_; }
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string field_;
  double value_;
  std::string constraint_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// dB conversion of a nonpositive linear power.
class NonPositiveLinear : public DomainError {
 public:
  explicit NonPositiveLinear(double value)
      : DomainError("linear power must be > 0 to convert to dB, got " +
                    std::to_string(value)) {}
};

// An iterative solver exhausted its iteration budget. Signals a bug in the
// solver or a non-finite intermediate, not a user error.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace jamopt
