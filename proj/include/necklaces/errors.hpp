#pragma once

#include <stdexcept>
#include <string>

namespace necklaces {

// Raised when a request would exceed a configured enumeration or memory guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exact value does not fit the requested fixed-width type.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace necklaces
