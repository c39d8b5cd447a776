#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tilab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (range, size, shape).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A distance or eccentricity quantity was requested for a disconnected graph.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is disconnected") {}
};

/// A size cap was exceeded without the matching opt-in.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 input. `line` is 1-based, or 0 when parsing a bare string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tilab
