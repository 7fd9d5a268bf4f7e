#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// shape mismatches: non-square determinant, bad minor index lists, ...
struct DimensionError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

// bad call arguments (wrong initial-window length, index parity, ...)
struct ArgumentError : Error {
  using Error::Error;
};

// violated mathematical precondition (non-superperiodic input, w = 0, ...)
struct DomainError : Error {
  using Error::Error;
};

// data failed a structural validator (SL / tameness / degeneracy)
struct ValidationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace frieze
