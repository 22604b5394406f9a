#pragma once

#include <stdexcept>
#include <string>

namespace mixedbody {

// Base of every error raised by the library. The harness maps each
// subclass onto a process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments that violate an operation's precondition: dimension
// mismatches, empty operands, non-unimodular flags, and the like.
class ValidityError : public Error {
 public:
  using Error::Error;
};

// A state that correct code can never reach (singular interpolation
// grids, non-integral intersection numbers).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mixedbody
