#pragma once

#include <stdexcept>
#include <string>

namespace oddakh {

/// Malformed or inconsistent user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction was violated.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddakh
