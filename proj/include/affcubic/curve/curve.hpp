#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "affcubic/algebra/poly.hpp"
#include "affcubic/algebra/roots.hpp"
#include "affcubic/algebra/upoly.hpp"

namespace affcubic::curve {

using cd = std::complex<double>;
/// Complex projective point (x : y : z).
using Point3 = std::array<cd, 3>;
using RealPoint3 = std::array<double, 3>;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

/// Component id of the one-sided component; the oval, when present, is 1.
inline constexpr int kPseudoline = 0;
inline constexpr int kOval = 1;

/// One vertical strip of the sweep: the open x-range between consecutive
/// critical values, with the components of its branches listed bottom to top.
struct Cell {
  std::optional<Rational> lo, hi;  // nullopt: unbounded
  Rational sample;
  std::vector<int> branch_component;
};

/// Topology of a nonsingular real plane cubic, computed by an exact sweep in
/// a random affine chart.
struct PlaneCubicAnalysis {
  Poly cubic;
  /// Chart transform: the chart cubic is cubic(M p).
  Matrix3 transform;
  Poly chart_cubic;
  /// Chart cubic at z = 1 as a cubic in y: coefficient k is a polynomial in x.
  std::array<UPoly, 4> y_coeffs;
  /// Discriminant in y; square-free of degree 6.
  UPoly discriminant;
  std::vector<Interval> critical;
  std::vector<double> critical_approx;
  std::vector<Cell> sweep;
  int component_count = 0;
  std::optional<int> oval_id;
};

/// Throws SingularCurve when no admissible chart is found: a chart with a
/// square-free degree 6 discriminant certifies nonsingularity, so only the
/// singular verdict is probabilistic.
PlaneCubicAnalysis analyze_cubic(const Poly& cubic, std::uint64_t seed = 1);

struct Location {
  int component;
  bool on_oval;
};

/// Component of a real point of the curve; NotOnCurve when the normalized
/// residual exceeds tol.
Location locate(const PlaneCubicAnalysis& a, const RealPoint3& p, double tol = 1e-9);

struct Conic {
  Poly form;
  bool empty_real_locus = false;
  /// Zero determinant: a line pair or double line.
  bool degenerate = false;
};

Conic make_conic(const Poly& form);

struct IntersectionPoint {
  Point3 point;
  int multiplicity = 1;
  bool real = false;
  std::optional<int> component;
};

struct SixTuple {
  std::vector<IntersectionPoint> points;  // multiplicities sum to 6
  bool transversal = false;
  int real_count = 0;
  /// Real intersections (with multiplicity) on the one-sided component and on
  /// the oval.
  int on_pseudoline = 0;
  int on_oval = 0;
};

/// Transversality is exact: a square-free degree 6 eliminant certifies it.
/// Throws SharedComponent when the eliminant vanishes identically.
SixTuple conic_cubic_intersection(const Conic& b, const PlaneCubicAnalysis& c,
                                  std::uint64_t seed = 2);

/// Exact conic through five rational points; RankDeficient unless the
/// conditions are independent.
Conic conic_through_five(std::span<const std::array<Rational, 3>> points);

/// Coefficients of x^2, xy, xz, y^2, yz, z^2.
using ConicCoeffs = std::array<cd, 6>;

/// Numeric conic through five complex points.
ConicCoeffs conic_through_five(std::span<const Point3> points, double tol = 1e-10);

/// Sixth point of B.C where B is the conic through the five given points of
/// C. Throws MultiplicityAmbiguity when the removal cannot be decided.
Point3 residual_point(const PlaneCubicAnalysis& c, std::span<const Point3> five);
Point3 residual_point(const Poly& cubic, std::span<const Point3> five);

/// Unit norm with the first coordinate above 1e-8 rotated to be positive real.
Point3 normalize(const Point3& p);
/// Phase-invariant distance between projective points.
double distance(const Point3& a, const Point3& b);

}  // namespace affcubic::curve
