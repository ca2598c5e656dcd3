#pragma once

#include <stdexcept>
#include <string>

namespace indep {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (ground size, group order, expression depth, ...) was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Arguments live on different sites, or have mismatched dimensions/primes.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace indep
