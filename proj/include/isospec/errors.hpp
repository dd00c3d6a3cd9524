#pragma once

#include <stdexcept>
#include <string>

namespace isospec {

// Malformed textual input (fractions, parameter lists, JSON documents).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed request that is mathematically inadmissible: zero grid step,
// mismatched steps, closure violation, degenerate spectrum.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace isospec
