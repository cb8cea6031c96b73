#ifndef ARRCOH_RATIONAL_HPP
#define ARRCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrcoh {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (gcd(|num|, den) = 1, den > 0) through arithmetic; the factory below
// canonicalizes explicitly constructed fractions.
using Rational = mpq_class;

/// Canonical rational from a numerator/denominator pair. Throws on zero denominator.
Rational make_rational(long numerator, long denominator = 1);

/// Parse "3", "-7", "2/5", "-3/4". Whitespace is not accepted. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "3", "-2/5".
std::string to_string(const Rational& value);

} // namespace arrcoh

#endif
