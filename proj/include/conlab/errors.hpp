#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conlab {

// Violation of a mathematical precondition or invariant.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a = q*b had no solution q.  Usually means an upstream convention is wrong.
class InexactDivision : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed textual input.  line is 0 for single-line inputs; column is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace conlab
