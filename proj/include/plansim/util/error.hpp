#pragma once

#include <stdexcept>
#include <string>

namespace plansim {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a remote endpoint misbehaves (transport failure, malformed reply).
class TransportError : public Error {
 public:
  explicit TransportError(const std::string& what) : Error(what) {}
};

}  // namespace plansim
