#pragma once

#include <stdexcept>
#include <string>

namespace lcurve {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of different matrix sizes.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Enumeration or classification requested above the size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Bruhat elimination met a column without an admissible pivot.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

// A numerical spin element is not close to any element of the finite group.
class SnapError : public Error {
 public:
  using Error::Error;
};

// Path lifting step guard violated or start point inconsistent.
class PathError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcurve
