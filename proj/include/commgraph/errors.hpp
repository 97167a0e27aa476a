#pragma once

#include <stdexcept>
#include <string>

namespace commgraph {

// Invalid group data: bad constructor parameters or a Cayley table that
// violates closure, associativity, identity or inverse laws.
class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph or table text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was asked to work on an input larger than its guard allows.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace commgraph
