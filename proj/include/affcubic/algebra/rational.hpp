#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affcubic {

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses an integer, decimal (`-1.25`) or fraction (`3/4`) literal exactly.
Rational parse_rational(std::string_view text);

/// `p` or `p/q` in lowest terms.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace affcubic
