#pragma once

#include <stdexcept>

namespace wreath {

/// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation needed more than its configured cap (support size, memory,
/// search nodes).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wreath
