#pragma once

#include <stdexcept>
#include <string>

namespace omeganorm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

// Generator closure grew past the configured element cap.
struct OrderCapExceeded : Error {
  using Error::Error;
};

// Full subgroup-lattice enumeration was requested for a group above the cap.
struct LatticeCapExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace omeganorm
