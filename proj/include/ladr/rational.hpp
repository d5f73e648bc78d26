#pragma once

#include <gmpxx.h>

#include <string>

namespace ladr {

// Exact arithmetic everywhere; no floating point in the solver paths.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" with integer p, q and q > 0 after canonicalization.
// If allow_decimal is set, also accepts decimal literals like "1.25" (converted
// exactly). Anything else raises ParseError.
Rational parse_rational(const std::string& text, bool allow_decimal = false);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

// Largest integer <= value.
Integer floor_int(const Rational& value);
// Smallest integer >= value.
Integer ceil_int(const Rational& value);

}  // namespace ladr
