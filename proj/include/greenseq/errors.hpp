#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greenseq {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A c-vector with entries of both signs (or no nonzero entry). This only
/// happens for ice quivers that were not reached from a framed quiver.
class SignCoherenceError : public Error {
public:
  using Error::Error;
};

/// A derived conclusion disagreed with a direct computation. Never a
/// legitimate outcome; it indicates a defect in the engine.
class InternalError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace greenseq
