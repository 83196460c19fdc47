#pragma once

#include <stdexcept>
#include <string>

namespace lexplace {

// Malformed input, failed validation, or a violated precondition. The CLI maps
// this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Either the input was not what it was
// claimed to be, or there is a bug. The CLI maps this to exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lexplace
