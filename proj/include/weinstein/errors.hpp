#pragma once

#include <stdexcept>
#include <string>

namespace weinstein {

// Error taxonomy shared by the library and the CLI. The CLI maps
// ValidationError/DomainError/PreconditionError to exit code 2 and
// RangeError/NumericalQualityError to exit code 3, IoError to exit code 1.

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

struct RangeError : std::range_error {
  using std::range_error::range_error;
};

struct NumericalQualityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace weinstein
