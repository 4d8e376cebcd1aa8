#pragma once

#include <stdexcept>
#include <string>

namespace wald {

/// Malformed or out-of-contract input (bad JSON, invalid shape, bad flags).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed input on which the requested computation is undefined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace wald
