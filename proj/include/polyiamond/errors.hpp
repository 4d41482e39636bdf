#pragma once

#include <stdexcept>
#include <string>

namespace polyiamond {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested size exceeds a configured hard cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A geometry or configuration violates one of its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data (tables, files, arguments).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An iterative numeric method failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyiamond
