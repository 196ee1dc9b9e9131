#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rounding_forge {

/// Exact rational scalar. GMP keeps every mpq_class canonical after
/// arithmetic: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", "-p/q". The result is reduced. Throws Error(kParse).
Rational parse_rational(std::string_view text);

/// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const Rational& value);

/// Compact human form: "3", "-1/2".
std::string to_display_string(const Rational& value);

/// True when value = r*r for some rational r; stores r (r >= 0).
bool rational_sqrt(const Rational& value, Rational* root);

}  // namespace rounding_forge
