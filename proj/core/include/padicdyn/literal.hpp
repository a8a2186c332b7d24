#pragma once

#include <string>

#include "padicdyn/padic.hpp"

namespace padicdyn {

/// Parses a p-adic literal. Accepted forms:
///   rational:   "26", "-4/29", "2-26-5" (sums/differences of integers)
///   digit form: "d0+d1*p+d2*p^2+..." with digits in [0, p-1]
///   scaled:     "p^v*(...)" wrapping either form above
PadicNumber parse_literal(const std::string& text, const Prime& p);

/// "a/b" (or "a" when b == 1), the exact rational value.
std::string to_rational_literal(const PadicNumber& x);

/// Canonical digit literal at precision N, mirroring the input grammar.
std::string to_digit_literal(const PadicNumber& x, unsigned N);

}  // namespace padicdyn
