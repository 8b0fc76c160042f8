#pragma once

#include <stdexcept>
#include <string>

namespace randotop {

// Argument outside the domain of an operation (t ∉ [0,1], endpoint outside [0,1], ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A value violates the invariant of its type (non-nested chain, overlapping classes, ...).
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dimensions of the operands do not line up.
class arity_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation-specific precondition failed.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace randotop
