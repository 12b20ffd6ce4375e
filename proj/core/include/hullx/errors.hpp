#pragma once

#include <stdexcept>
#include <string>

namespace hullx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: shape mismatches, out-of-range labels, bad parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A theorem's hypothesis does not hold for the given input. The identity is
/// not expected to hold there, so this is distinct from a violation.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration guard was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be parsed exactly.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hullx
