#pragma once

#include <stdexcept>
#include <string>

namespace gps {

/// Raised when an iterative numerical procedure fails to converge or a
/// computed result contradicts its own consistency checks.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gps
