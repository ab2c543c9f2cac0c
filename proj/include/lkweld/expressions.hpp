#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lkweld/caratheodory.hpp"
#include "lkweld/errors.hpp"

namespace lkweld {

// Syntax error in a driving or delta expression; position is the 0-based
// character offset into the input.
class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : InvalidArgument("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace-insensitive):
//   driving := "p" "=" "1" { "+" term }
//   term    := "(" num "," num ")" [ "*" "exp" "(" num "*" "t" ")" ] "*" "z" "^" int
// with int >= 1. The result is validated against the Caratheodory margin.
DrivingFunction parse_driving(std::string_view text,
                              double horizon = std::numeric_limits<double>::infinity());

// Inverse of parse_driving with 17 significant digits.
std::string format_driving(const DrivingFunction& p);

// Finite trigonometric shape for the welding experiments:
//   shape := term { ("+" | "-") term }
//   term  := num [ "*" ("cos" | "sin") "(" [ int "*" ] "psi" ")" ]
// A bare number is a constant term.
struct HarmonicTerm {
  int k = 0;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

struct DeltaShape {
  std::vector<HarmonicTerm> terms;
  double operator()(double psi) const;
};

DeltaShape parse_delta_shape(std::string_view text);
std::string format_delta_shape(const DeltaShape& shape);

}  // namespace lkweld
