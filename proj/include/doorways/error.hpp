#pragma once

#include <stdexcept>
#include <string>

namespace doorways {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Both operands of an ordering or arithmetic operation are quadratic
/// irrationals over different radicands.
class UnsupportedComparison : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

/// A query required a hallway that admits a line of sight.
class NoLineOfSight : public Error {
  public:
    using Error::Error;
};

/// A line meets an integer lattice point where an interior line was required.
class LatticeTouch : public Error {
  public:
    using Error::Error;
};

class NotVisible : public Error {
  public:
    using Error::Error;
};

class InvalidLength : public Error {
  public:
    using Error::Error;
};

class ResourceLimit : public Error {
  public:
    using Error::Error;
};

class PreconditionViolated : public Error {
  public:
    using Error::Error;
};

}  // namespace doorways
