#pragma once

#include <stdexcept>
#include <string>

namespace symtrace {

// Malformed arguments: dimension or degree mismatches, bad indices, empty inputs.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// The functional u on V⊗W is identically zero.
class DegenerateFunctional : public std::domain_error {
 public:
  explicit DegenerateFunctional(const std::string& what) : std::domain_error(what) {}
};

// A documented precondition on the mathematical data does not hold.
class PreconditionViolation : public std::domain_error {
 public:
  explicit PreconditionViolation(const std::string& what) : std::domain_error(what) {}
};

// An identity that must hold exactly was observed to fail.
class IdentityViolation : public std::logic_error {
 public:
  explicit IdentityViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace symtrace
