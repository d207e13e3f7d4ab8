#pragma once

#include <stdexcept>
#include <string>

namespace grover {

/// Raised for out-of-range qubit counts, indices, iteration counts and other
/// invalid run parameters.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when two objects that must share a dimension do not.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace grover
