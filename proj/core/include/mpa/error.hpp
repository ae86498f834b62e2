#pragma once

#include <stdexcept>

namespace mpa {

/// An argument lies outside the domain on which an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical routine failed where existence and monotonicity guarantee
/// success. Indicates a bug, not bad input.
class NumericalDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpa
