#pragma once

#include <stdexcept>
#include <string>

namespace triform {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSymmetricError : Error {
  using Error::Error;
};

struct NonFiniteError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct InvalidConfigError : Error {
  using Error::Error;
};

}  // namespace triform
