#pragma once

#include <stdexcept>
#include <string>

namespace metricgeo {

/// Malformed or out-of-contract input. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point lies outside the domain of a map (e.g. inverting the base point).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace metricgeo
