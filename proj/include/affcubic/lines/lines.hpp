#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "affcubic/algebra/poly.hpp"
#include "affcubic/lines/homotopy.hpp"
#include "affcubic/lines/plucker.hpp"

namespace affcubic::lines {

struct LineSet {
  std::vector<PluckerLine> lines;
  /// conj_pairing[i] is the index of the complex conjugate of line i.
  std::vector<int> conj_pairing;
  int real_count = 0;
};

struct SolveOptions {
  std::uint64_t seed = 0x5eed;
  bool parallel = true;
  TrackerOptions tracker{};
  double separation = 1e-6;
  double residual_tol = 1e-10;
  /// Fresh gamma constants are drawn this many times before giving up.
  int attempts = 3;
};

/// All 27 lines on a nonsingular cubic surface F = 0 in P^3, sorted
/// canonically. Throws NearDiscriminant when 27 well separated lines are not
/// found.
LineSet solve_lines(const Poly& cubic, const SolveOptions& opts = {});

/// Max |F| over unit-norm sample points of the line, with F scaled so its
/// largest coefficient has magnitude 1.
double line_residual(const CubicTensor& t, const Plucker& p);

/// Real lines with imaginary parts dropped.
std::vector<PluckerLine> real_lines(const LineSet& ls);

/// adjacency[i] lists the lines meeting line i.
std::vector<std::vector<int>> incidence_graph(const LineSet& ls);

struct Triple {
  std::array<int, 3> index;
  bool real;
};

/// The 45 coplanar triples. A triple is real when conjugation maps it to itself.
std::vector<Triple> tritangent_triples(const LineSet& ls);

/// Intersection of a line with the plane h . x = 0, unit-normalized.
/// Throws LineInPlane when the line lies in the plane.
Vec4 line_plane_point(const PluckerLine& line, const Vec4& plane);

}  // namespace affcubic::lines
