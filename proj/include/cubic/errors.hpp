#pragma once

#include <stdexcept>

namespace cubic {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver was asked to handle a case its formula does not cover.
class InvalidCase : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A non-finite value appeared in an intermediate quantity.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubic
