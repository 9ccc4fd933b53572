#include "affcubic/lines/plucker.hpp"

#include <algorithm>
#include <cmath>

namespace affcubic::lines {

cd plucker_entry(const Plucker& p, int i, int j) {
  if (i == j) return 0;
  return i < j ? p[plucker_index(i, j)] : -p[plucker_index(j, i)];
}

Plucker wedge(const Vec4& a, const Vec4& b) {
  Plucker p;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) p[plucker_index(i, j)] = a[i] * b[j] - a[j] * b[i];
  return p;
}

double norm(const Plucker& p) {
  double s = 0;
  for (const auto& v : p) s += std::norm(v);
  return std::sqrt(s);
}

double norm(const Vec4& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

Plucker normalize(const Plucker& p, double eps) {
  Plucker q = p;
  const double n = norm(p);
  for (auto& v : q) v /= n;
  for (const auto& v : q) {
    if (std::abs(v) > eps) {
      const cd phase = std::conj(v) / std::abs(v);
      for (auto& w : q) w *= phase;
      break;
    }
  }
  return q;
}

cd plucker_relation(const Plucker& p) { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

cd incidence(const Plucker& a, const Plucker& b) {
  return a[0] * b[5] - a[1] * b[4] + a[2] * b[3] + a[3] * b[2] - a[4] * b[1] + a[5] * b[0];
}

double distance(const Plucker& a, const Plucker& b) {
  // Norm of the part of b orthogonal to a, both unit; equals sqrt(1 - |<a,b>|^2)
  // without the cancellation.
  const double na = norm(a), nb = norm(b);
  cd dot = 0;
  for (int k = 0; k < 6; ++k) dot += std::conj(a[k]) * b[k];
  dot /= na * nb;
  double s = 0;
  for (int k = 0; k < 6; ++k) s += std::norm(b[k] / nb - dot * a[k] / na);
  return std::sqrt(s);
}

Plucker conjugate(const Plucker& p) {
  Plucker q;
  for (int k = 0; k < 6; ++k) q[k] = std::conj(p[k]);
  return q;
}

Vec4 meet_plane(const Plucker& p, const Vec4& h) {
  Vec4 x{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) x[i] += plucker_entry(p, i, j) * h[j];
  return x;
}

std::pair<Vec4, Vec4> spanning_points(const Plucker& p) {
  // The largest coordinate p_ij gives the best-conditioned pair of
  // coordinate planes: the line meets {x_j = 0} and {x_i = 0} in
  // independent points.
  int best = 0;
  for (int k = 1; k < 6; ++k)
    if (std::abs(p[k]) > std::abs(p[best])) best = k;
  int bi = 0, bj = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (plucker_index(i, j) == best) {
        bi = i;
        bj = j;
      }
  Vec4 ej{}, ei{};
  ej[bj] = 1;
  ei[bi] = 1;
  return {meet_plane(p, ej), meet_plane(p, ei)};
}

}  // namespace affcubic::lines
