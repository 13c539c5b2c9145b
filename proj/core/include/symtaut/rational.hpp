#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symtaut {

using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(int n);

/// g (g-1) ... (g-s+1), i.e. s! * C(g, s); zero once s exceeds a non-negative g.
Integer falling_factorial(int g, int s);

/// Generalized binomial: r (r-1) ... (r-n+1) / n!, with C(r, 0) = 1.
/// Upper index may be any rational (in particular negative).
Rational binomial(const Rational& upper, int n);

/// Canonical "p" or "p/q" decimal form.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; throws ParameterError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Exact ceiling of num/den for den > 0.
long ceil_div(long num, long den);

}  // namespace symtaut
