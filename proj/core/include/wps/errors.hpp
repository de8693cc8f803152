#pragma once

#include <stdexcept>
#include <string>

namespace wps {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  SingularMatrixError() : std::domain_error("matrix is singular") {}
  using std::domain_error::domain_error;
};

class InvalidWeightsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateSimplexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a matrix expected to have entry-gcd 1 does not.
class NonPrimitiveMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace wps
