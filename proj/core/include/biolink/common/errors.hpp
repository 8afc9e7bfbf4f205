#pragma once

#include <stdexcept>
#include <string>

namespace biolink {

/// Input outside the mathematical domain of an operation (non-positive
/// frequency, zero mote count, separation inside the coil, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed arguments: wrong block length, empty distance list.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Circuit solve hit a zero denominator.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace biolink
