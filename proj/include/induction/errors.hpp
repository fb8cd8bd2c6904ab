#pragma once

#include <stdexcept>
#include <string>

namespace induction {

// Argument outside the mathematical domain of an operation (t > n, theta
// outside [0,1], non-positive shape, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The Bayes update has no proper limit, e.g. the Haldane prior with no data,
// or data that every component of the prior assigns probability zero.
class NoUpdatePossible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// P(G) is not defined for an improper prior, so a confirmation measure
// relative to the prior cannot be formed.
class UndefinedConfirmation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pure atom carries no continuous part from which a prior could be read off.
class PriorNotIdentifiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownProcedure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Iterative special-function evaluation failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace induction
