#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equiarbor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; `offset()` is the byte position where decoding failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ConnectivityError : public Error {
 public:
  using Error::Error;
};

class InfiniteResistanceError : public Error {
 public:
  using Error::Error;
};

/// The grounded conductance system is singular (only possible with negative conductances).
class SingularNetworkError : public Error {
 public:
  using Error::Error;
};

class SingularEliminationError : public Error {
 public:
  using Error::Error;
};

class NonRealizableError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ScaleError : public Error {
 public:
  using Error::Error;
};

/// A closed form disagreed with the generic solver, or a proven identity failed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace equiarbor
