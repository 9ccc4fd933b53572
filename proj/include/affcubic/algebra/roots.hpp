#pragma once

#include <complex>
#include <span>
#include <vector>

#include "affcubic/algebra/upoly.hpp"

namespace affcubic {

/// Isolating interval. Either a point (lo == hi, an exact rational root) or
/// an open interval (lo, hi) whose endpoints are not roots.
struct Interval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational mid() const { return (lo + hi) / 2; }
  double approx() const { return mid().get_d(); }
};

struct RealRoot {
  Interval interval;
  int multiplicity = 1;
};

/// Real roots of a nonzero polynomial, ordered and pairwise disjoint, with
/// multiplicities from the square-free factorization. Descartes' rule of
/// signs with bisection on each square-free factor.
std::vector<RealRoot> real_roots(const UPoly& p);

/// Isolating intervals of a square-free polynomial.
std::vector<Interval> isolate_squarefree(const UPoly& p);

/// Shrinks an isolating interval of the square-free `p` until hi - lo < width.
Interval refine(const UPoly& p, Interval iv, const Rational& width);

/// Sign of q at the root of the square-free p isolated by iv; exact, and 0
/// when q vanishes there.
int sign_at_root(const UPoly& p, const UPoly& q, Interval iv);

/// Number of real roots of p counted without multiplicity.
int count_distinct_real_roots(const UPoly& p);

struct ComplexRootOptions {
  double tol = 1e-12;
  int max_iterations = 200;
};

/// All deg(p) complex roots by Aberth-Ehrlich simultaneous iteration,
/// followed by Newton polishing. Coefficients lowest degree first.
///
/// Acceptance is backward-error style: |p(z)| <= tol * sum |a_k| |z|^k.
/// Throws NonConvergence when the budget is exhausted first.
std::vector<std::complex<double>> complex_roots(std::span<const std::complex<double>> coeffs,
                                                const ComplexRootOptions& opts = {});
std::vector<std::complex<double>> complex_roots(const UPoly& p,
                                                const ComplexRootOptions& opts = {});

}  // namespace affcubic
