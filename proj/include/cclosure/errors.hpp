#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cclosure {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

// A configurable work cap was exceeded (enumeration size, recursion depth,
// solver frontier, ...). Indicates an input beyond desk scale.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Broken precondition or internal invariant (e.g. char_series on a set whose
// flags were never established).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace cclosure
