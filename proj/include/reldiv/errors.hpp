#pragma once

#include <stdexcept>
#include <string>

namespace reldiv {

/// Terms of mismatched length, malformed divisions and similar shape errors.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A term or node that is not part of the division/graph it was looked up in.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An operation outside its mathematical domain (min_var of 1, mixed degrees).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation that needs a valid relative involutive division got another.
class InvalidDivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed term strings and JSON documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reldiv
