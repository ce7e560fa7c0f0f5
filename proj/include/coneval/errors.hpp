#pragma once

#include <stdexcept>
#include <string>

namespace coneval {

// Invalid caller input: dimension mismatches, malformed values, unknown names.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally valid input that an operation does not support.
class UnsupportedInputError : public std::domain_error {
 public:
  explicit UnsupportedInputError(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace coneval
