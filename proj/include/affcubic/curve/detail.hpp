#pragma once

#include <random>

#include "affcubic/curve/curve.hpp"

// Chart plumbing shared by the curve sources.
namespace affcubic::curve::detail {

Matrix3 random_transform(std::mt19937_64& rng);
Rational determinant(const Matrix3& m);
Matrix3 inverse(const Matrix3& m);
/// f(M p) for a ternary form f.
Poly apply(const Poly& f, const Matrix3& m);
/// Dehomogenization at z = 1 (z stays in the variable set).
Poly affine_part(const Poly& f);
std::array<UPoly, 4> y_coefficients(const Poly& affine);
double coefficient_norm(const Poly& f);

}  // namespace affcubic::curve::detail
