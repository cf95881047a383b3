#pragma once

#include <stdexcept>
#include <string>

namespace satpow {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated algebraic contract: ring mismatch, iteration cap exceeded,
// non-torsion quotient where a finite length was required, and similar.
struct AlgebraError : Error {
  using Error::Error;
};

// Syntax or validation failure in the job language. Positions are 1-based.
struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

}  // namespace satpow
