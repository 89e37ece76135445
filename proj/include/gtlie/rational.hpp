#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gtlie {

/// Exact rational of unbounded size. Always kept canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned m);
Rational binomial(unsigned n, unsigned k);

}  // namespace gtlie
