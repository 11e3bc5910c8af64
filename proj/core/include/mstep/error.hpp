#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mstep {

/// Base class for every error raised by the library on bad input or
/// unsatisfied preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (stored powers, oracle size) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The analytic construction needs every strong component to have at least
/// two vertices.
class TrivialComponentPresent : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two independent computations disagreed. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mstep
