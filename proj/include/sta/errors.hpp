#pragma once

#include <stdexcept>
#include <string>

namespace sta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampling interval or index range is empty or inverted.
class InvalidRange : public Error {
 public:
  using Error::Error;
};

/// Rotation was asked to act on the zero vector.
class DegenerateState : public Error {
 public:
  using Error::Error;
};

/// Translation was asked to move along a zero-length direction.
class DegenerateDirection : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters, dimensions, or configuration keys.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Lookup of an unknown name.
class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace sta
