#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germ {

/// Base of every error raised by the library. The CLI maps the concrete
/// subclass onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or problem file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Operands from incompatible rings, bad arguments to an operation.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold: non-isolated singularity,
/// non-ICIS prefix, declared dimension mismatch, non-admissible pair.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A random draw (or pinned form) failed a genericity check, or the
/// redraw budget was exhausted.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same number disagreed.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace germ
