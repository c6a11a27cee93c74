#pragma once

#include <stdexcept>
#include <string>

namespace mlfit {

// Base class for all mlfit errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument or parameter outside the mathematical domain (alpha <= 0, x <= 0, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

// Gamma evaluated at zero or a negative integer.
class PoleError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Result (or an intermediate) exceeds double range.
class OverflowError : public Error {
  public:
    using Error::Error;
};

// |z| exceeds SeriesPolicy::max_abs_arg.
class SeriesGuardError : public Error {
  public:
    using Error::Error;
};

// Series did not satisfy the truncation rule within max_terms.
class SeriesConvergenceError : public Error {
  public:
    using Error::Error;
};

// Malformed input text. Carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

  private:
    int line_;
};

// Structurally valid input that violates a dataset invariant.
class ValidationError : public Error {
  public:
    using Error::Error;
};

// Too few data points to seed a fit.
class DegenerateDataError : public Error {
  public:
    using Error::Error;
};

}  // namespace mlfit
