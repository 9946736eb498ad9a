#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extremal {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph or search exceeds a fixed size limit (vertex capacity, canonical
/// limit, component limit, search cap).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Family parameters are out of range or a construction is inapplicable.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input; `offset` is the byte where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Persistent data failed re-validation.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace extremal
