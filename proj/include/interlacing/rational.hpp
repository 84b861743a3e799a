#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace interlacing {

/// Arbitrary-precision rational. GMP keeps every mpq_class in canonical
/// form after arithmetic (positive denominator, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q". Rejects q <= 0, empty strings and stray characters.
/// Non-reduced input such as "2/4" is accepted and canonicalized.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

inline Rational abs_value(const Rational& value) { return abs(value); }


}  // namespace interlacing
