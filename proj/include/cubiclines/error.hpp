#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubiclines {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input did not conform to the grammar. Carries a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Operation mixed polynomials from different variable contexts or orders.
class ContextMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// A configured Groebner/search budget was exceeded.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Trial-division range (64-bit norms) exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensionalError : public Error {
 public:
  using Error::Error;
};

// Lex back-substitution could not find a univariate at some level even
// after the random-change retries.
class TriangularityError : public Error {
 public:
  using Error::Error;
};

class NotOnCubicError : public Error {
 public:
  using Error::Error;
};

class NotSecondTypeError : public Error {
 public:
  using Error::Error;
};

// The 3x3 tangency matrix dropped below rank 2 at a second-type line,
// which cannot happen on a smooth cubic.
class TangencyRankError : public Error {
 public:
  using Error::Error;
};

class SingularCubicError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubiclines
