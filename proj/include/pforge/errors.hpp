#pragma once

#include <stdexcept>
#include <string>

namespace pforge {

// Bad user input: malformed JSON, dimension mismatch, violated precondition.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured cap or budget was exhausted before an answer was certified.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Attempt to invert a non-unit (reduction mod p is singular).
struct not_unit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pforge
