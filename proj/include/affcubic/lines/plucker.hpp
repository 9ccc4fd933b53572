#pragma once

#include <array>
#include <complex>
#include <utility>

namespace affcubic::lines {

using cd = std::complex<double>;
using Vec4 = std::array<cd, 4>;
using Plucker = std::array<cd, 6>;

/// Index of coordinate p_ij in the order p01, p02, p03, p12, p13, p23.
constexpr int plucker_index(int i, int j) {
  constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[i][j];
}

/// Entry (i, j) of the antisymmetric Plucker matrix.
cd plucker_entry(const Plucker& p, int i, int j);

struct PluckerLine {
  Plucker p{};
  bool is_real = false;
  double residual = 0;
};

Plucker wedge(const Vec4& a, const Vec4& b);
double norm(const Plucker& p);
double norm(const Vec4& v);

/// Unit norm, with the first coordinate of modulus above `eps` rotated to
/// the positive real axis.
Plucker normalize(const Plucker& p, double eps = 1e-6);

/// p01 p23 - p02 p13 + p03 p12.
cd plucker_relation(const Plucker& p);

/// Bilinear incidence form; zero iff the two lines meet.
cd incidence(const Plucker& a, const Plucker& b);

/// Phase-invariant distance sqrt(1 - |<a,b>|^2) between unit vectors.
double distance(const Plucker& a, const Plucker& b);

Plucker conjugate(const Plucker& p);

/// The point L * h where the line meets the plane {h . x = 0}; zero if the
/// line lies in the plane.
Vec4 meet_plane(const Plucker& p, const Vec4& h);

/// Two independent points spanning the line.
std::pair<Vec4, Vec4> spanning_points(const Plucker& p);

}  // namespace affcubic::lines
