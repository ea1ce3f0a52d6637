#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgepart {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter is outside the range an operation accepts.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The input graph (or formula) does not belong to the class an operation
// is defined on, e.g. a non-tree passed to a tree algorithm.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exhaustive search would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Externally supplied data (gadget files) violates a structural constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace edgepart
