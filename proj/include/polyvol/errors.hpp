#pragma once

#include <stdexcept>
#include <string>

namespace polyvol {

// Base class for every error the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based line number of the offending line.
struct ParseError : Error {
  ParseError(int line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  int line;
};

// Mismatched vector/matrix/point dimensions.
struct DimensionError : Error {
  using Error::Error;
};

// The feasible region admits a recession direction; vertex enumeration
// refuses to run on it.
struct UnboundedError : Error {
  using Error::Error;
};

// A combinatorial search would exceed its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

// Geometric degeneracy where the operation's contract requires general
// position (e.g. a side predicate on an affinely dependent spanning set).
struct DegenerateError : Error {
  using Error::Error;
};

}  // namespace polyvol
