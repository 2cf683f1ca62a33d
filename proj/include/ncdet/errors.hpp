#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncdet {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands come from incompatible rings (different generator sets or ranks).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A size guardrail was hit (matrix dimension, term count, rank).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Matrix shapes do not fit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a ring capability the element type lacks
/// (commutativity, a Z2-grading, a unimodular matrix, ...).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A ring homomorphism was asked to map a generator it has no image for.
class MissingAssignment : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction did not.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed input document or command-line value.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ncdet
