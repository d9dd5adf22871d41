#pragma once

#include <stdexcept>
#include <string>

namespace sieved {

/// Evaluation outside the domain of a function (z = 0 with negative powers,
/// |x| >= 2 for the interval weight, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Verblunsky parameter with |a_n| >= 1 was requested.
class ValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sample point collides with a pole of an operator coefficient.
class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Laurent polynomial expected to be invariant under z -> 1/z is not.
class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure, e.g. a nonzero remainder in a division
/// that should be exact.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Operator composition that would produce a derivative of order > 2.
class UnsupportedComposition : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Precondition violation on an argument (bad index, bad size, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sieved
