#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A denominator vanishes or a leading coefficient is not a unit.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Parameters outside the declared domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qseries
