#pragma once

#include <stdexcept>
#include <string>

namespace uqgl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A denominator vanished at a numeric sample (resample q) or an exact
/// division by zero was attempted.
struct DivisionByZero : Error {
  using Error::Error;
};

/// A square root of a negative value was requested in a real-valued engine.
struct NegativeRadicand : Error {
  using Error::Error;
};

/// Bad index, unsupported signature or precondition violation.
struct InvalidArgument : Error {
  using Error::Error;
};

/// An operation the chosen coefficient ring cannot represent exactly.
struct Unsupported : Error {
  using Error::Error;
};

}  // namespace uqgl
