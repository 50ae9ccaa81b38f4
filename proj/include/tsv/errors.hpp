#pragma once

#include <stdexcept>
#include <string>

namespace tsv {

// Caller passed operands of incompatible shape. Distinct from a mathematical
// "no" such as a singular matrix, which is reported through optional/bool.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two scalars from different quadratic extensions met in one operation.
class ExtensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value failed its type invariant at construction (J^2 != -I, a block that
// does not intertwine the complex structures, ...).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnIsogeny : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sublattice handed to the isotropy checks is not stable under J_X.
class NotJStable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The independent symplectic-membership oracles returned different verdicts.
class OracleDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An assertion that the classification theory guarantees has failed. The
// message carries a full dump of the offending input.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Precondition of the classifier (certified division algebra, symplectic
// input) is not met.
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ")"
                                    : what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tsv
