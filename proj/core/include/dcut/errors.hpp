#pragma once

#include <stdexcept>
#include <string>

namespace dcut {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed graph6 input; `offset` is the byte position of the problem.
class Graph6ParseError : public Error {
public:
  Graph6ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Instance exceeds a size guard of an exhaustive routine.
class GuardError : public Error {
public:
  using Error::Error;
};

// No algorithm applies to the given instance.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

// A structural property that the theory guarantees failed at runtime.
// Signals an implementation bug or an undetected class-membership violation.
class StructuralError : public Error {
public:
  using Error::Error;
};

// A gadget failed its build-time certification checks.
class CertificationError : public Error {
public:
  using Error::Error;
};

}  // namespace dcut
