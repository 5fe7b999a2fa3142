#pragma once

#include <stdexcept>
#include <string>

namespace rbch {

/// A caller-supplied argument violates an operation's precondition.
class invalid_parameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed-form result was requested outside the parameter range it covers.
class formula_not_applicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed its configured budget.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A witness search finished without producing a usable codeword.
class no_witness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rbch
