#pragma once

// Parser for polynomial expressions in x and theta, e.g.
//   "theta^2/2 - x*theta + x^2", "3/4 x theta^2", "(theta - x)*theta".
// Multiplication is '*' or juxtaposition; '/' divides by an integer.

#include "symtaut/rational.hpp"
#include "symtaut/taut_ring.hpp"

#include <map>
#include <string_view>
#include <utility>

namespace symtaut::cli {

/// (x exponent, theta exponent) -> coefficient, zero terms pruned.
using Polynomial = std::map<std::pair<int, int>, Rational>;

/// Throws ParameterError with the offending column on malformed input.
Polynomial parse_polynomial(std::string_view text);

/// Parses and converts to a class of R*(C_d). The expression must be
/// homogeneous of codimension at most d.
TautClass parse_class(std::string_view text, const Ambient& amb);

}  // namespace symtaut::cli
