#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "towers/codec.hpp"
#include "towers/polytower.hpp"

namespace towers {

// Wire format:
//
//   polytower   :=  signed_term ( "+" signed_term )*
//   signed_term :=  [ integer "*" ] tower
//   tower       :=  "1"  |  factor ( "*" factor )*
//   factor      :=  pillar [ "^" "(" [ "-" ] tower ")" ]
//   pillar      :=  "p" positive-integer
//
// Whitespace between tokens is ignored. The parser reorders factors into
// canonical pillar order, rejects a pillar repeated within one tower
// (CanonicalError), and accepts redundant parentheses around exponents.
// Malformed input raises SyntaxError with the byte offset.
//
// The printer is deterministic: factors ascending by pillar, exponent 1
// left out (except for reciprocals, which always print their exponent, as
// in "p1^(-1)"), unit coefficients left out, no redundant parentheses, and
// polytower terms ascending by value. Terms too large to evaluate sort
// after all evaluable ones, in structural order.

using ParsedValue = std::variant<Tower, Polytower>;

// A plain tower parses as a Tower; anything with coefficients or "+"
// parses as a Polytower.
[[nodiscard]] ParsedValue parse_value(std::string_view text);

// Insists on a plain tower.
[[nodiscard]] Tower parse_tower(std::string_view text);

// Promotes a plain tower to its one-term combination.
[[nodiscard]] Polytower parse_polytower(std::string_view text);

[[nodiscard]] std::string to_text(const Tower& t);
[[nodiscard]] std::string to_text(const Polytower& v);
// "1 + 2*x + x^2"; ascending degree, zero terms left out.
[[nodiscard]] std::string to_text(const UniPolynomial& p);
// "40" or "3/4".
[[nodiscard]] std::string to_text(const Rational& q);

}  // namespace towers
