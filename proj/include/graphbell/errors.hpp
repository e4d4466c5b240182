#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphbell {

/// Malformed expression or scenario text. Carries the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Structurally invalid input: bad graph, out-of-range vertex, size caps, ...
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different qubit counts.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An observable substitution hit a term it cannot rewrite.
class SubstitutionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A result disagrees with the expectation recorded for it.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphbell
