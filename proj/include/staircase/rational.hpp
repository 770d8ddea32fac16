#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace staircase {

// Exact rational coordinate. mpq_class keeps values canonical (gcd 1,
// positive denominator) after every arithmetic operation.
//
// Never bind a gmpxx expression to `auto`: the expression templates hold
// references to temporaries. Always spell out `Scalar`.
using Scalar = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "3", "-2", "0.5", "-1.25", "1/3", "-7/4". Anything else throws
// ParseError.
Scalar parse_scalar(std::string_view text);

// Decimal form when the value has a terminating expansion ("0.5", "-3"),
// otherwise "num/den".
std::string format_scalar(const Scalar& value);

inline int sign_of(const Scalar& value) {
  const int s = sgn(value);
  return (s > 0) - (s < 0);
}

// num / den in canonical form. The two-argument mpq_class constructor does
// not reduce, and comparisons assume reduced operands.
Scalar ratio(long num, long den);

long floor_to_long(const Scalar& value);
long ceil_to_long(const Scalar& value);

}  // namespace staircase
