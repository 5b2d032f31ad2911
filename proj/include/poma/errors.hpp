#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poma {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong shapes, out-of-range indices, bad JSON.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// The order is not a bounded distributive lattice.
class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

// Two independent routes disagreed; a bug, never a verdict.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace poma
