#pragma once

#include <stdexcept>
#include <string>

namespace snl {

// Two operands (or an operand and its declared structure) disagree on the
// block layout of the algebra.
class AlgebraMismatch : public std::invalid_argument {
 public:
  explicit AlgebraMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called outside its domain: a non-Hermitian input to the
// eigensolver, a negative operator handed to a power, an out-of-range time.
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

// Malformed serialized input.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snl
