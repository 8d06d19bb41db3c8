#pragma once

#include <stdexcept>

namespace gsearch {

// Bad arguments: vertex out of range, nonpositive epsilon, unknown generator kind.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance does not have the shape or cost model an algorithm requires.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exact solver or DP refuses an instance above its configured size limit.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsearch
