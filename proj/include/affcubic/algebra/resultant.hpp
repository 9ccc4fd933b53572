#pragma once

#include <cstddef>

#include "affcubic/algebra/poly.hpp"
#include "affcubic/algebra/upoly.hpp"

namespace affcubic {

/// Sylvester resultant of p and q with respect to variable `var`.
/// Computed as a fraction-free (Bareiss) determinant of the Sylvester matrix,
/// so it stays exact in the remaining variables.
Poly resultant(const Poly& p, const Poly& q, std::size_t var);

/// Resultant of two univariate polynomials.
Rational resultant(const UPoly& p, const UPoly& q);

/// res_var(p, q) where p, q involve only `var` and `keep`; returns a
/// univariate polynomial in `keep`.
UPoly eliminate(const Poly& p, const Poly& q, std::size_t var, std::size_t keep);

}  // namespace affcubic
