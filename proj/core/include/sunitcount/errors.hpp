#pragma once

#include <stdexcept>
#include <string>

namespace sunit {

// Thrown when a query would exceed a configured enumeration or family-size
// limit. The CLI maps this to exit code 3.
class GuardLimitError : public std::runtime_error {
 public:
  explicit GuardLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sunit
