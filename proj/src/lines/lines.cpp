#include "affcubic/lines/lines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include "affcubic/error.hpp"

namespace affcubic::lines {

namespace {

// Rotates a real line's coordinates onto the real axis and drops the
// imaginary noise.
Plucker realify(const Plucker& p) {
  int big = 0;
  for (int k = 1; k < 6; ++k)
    if (std::abs(p[k]) > std::abs(p[big])) big = k;
  const cd phase = std::conj(p[big]) / std::abs(p[big]);
  Plucker q;
  for (int k = 0; k < 6; ++k) q[k] = cd((p[k] * phase).real(), 0.0);
  return normalize(q);
}

std::array<long long, 12> sort_key(const Plucker& p) {
  std::array<long long, 12> key{};
  for (int k = 0; k < 6; ++k) {
    key[2 * k] = std::llround(p[k].real() * 1e8);
    key[2 * k + 1] = std::llround(p[k].imag() * 1e8);
  }
  return key;
}

int best_chart(const Plucker& p) {
  int best = 0;
  for (int k = 1; k < 6; ++k)
    if (std::abs(p[k]) > std::abs(p[best])) best = k;
  return best;  // chart order matches Plücker coordinate order
}

Plucker chart_line(const LineChart& chart, const Vec4& x) {
  auto [p, q] = chart.points(x);
  return normalize(wedge(p, q));
}

std::vector<Plucker> attempt(const CubicTensor& t, const SolveOptions& opts,
                             std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::vector<cd> gammas(6);
  for (auto& g : gammas) g = std::polar(1.0, angle(rng));
  std::vector<ChartTask> tasks;
  for (int c = 0; c < 6; ++c)
    for (int s = 0; s < 81; ++s) tasks.push_back({c, s});
  const auto results = opts.parallel ? track_all_parallel(t, tasks, gammas, opts.tracker)
                                     : track_all_serial(t, tasks, gammas, opts.tracker);
  const auto charts = LineChart::all();

  std::vector<Plucker> found;
  for (std::size_t n = 0; n < tasks.size(); ++n) {
    if (results[n].status != PathStatus::Converged) continue;
    Plucker p = chart_line(charts[tasks[n].chart_index], results[n].endpoint);
    // Polish in the best-conditioned chart.
    const auto& chart = charts[best_chart(p)];
    Vec4 x = chart.coordinates(p);
    if (!refine_newton(t, chart, x, 1e-14)) continue;
    p = chart_line(chart, x);
    if (line_residual(t, p) > opts.residual_tol) continue;
    bool duplicate = false;
    for (const auto& q : found)
      if (distance(p, q) < opts.separation) {
        duplicate = true;
        break;
      }
    if (!duplicate) found.push_back(p);
  }
  return found;
}

}  // namespace

double line_residual(const CubicTensor& t, const Plucker& p) {
  auto [a, b] = spanning_points(p);
  // Orthonormalize the spanning pair.
  const double na = norm(a);
  for (auto& v : a) v /= na;
  cd dot = 0;
  for (int k = 0; k < 4; ++k) dot += std::conj(a[k]) * b[k];
  for (int k = 0; k < 4; ++k) b[k] -= dot * a[k];
  const double nb = norm(b);
  for (auto& v : b) v /= nb;
  double worst = 0;
  for (int s = 0; s < 8; ++s) {
    const double th = std::numbers::pi * s / 8;
    const cd u = std::cos(th), w = std::polar(std::sin(th), 0.7 * s);
    Vec4 x;
    for (int k = 0; k < 4; ++k) x[k] = u * a[k] + w * b[k];
    worst = std::max(worst, std::abs(t.eval(x)));
  }
  return worst;
}

LineSet solve_lines(const Poly& cubic, const SolveOptions& opts) {
  const CubicTensor t(cubic);
  std::mt19937_64 rng(opts.seed);
  std::vector<Plucker> found;
  for (int a = 0; a < opts.attempts; ++a) {
    found = attempt(t, opts, rng);
    if (found.size() == 27) break;
  }
  if (found.size() != 27)
    throw Error(ErrorKind::NearDiscriminant,
                "found " + std::to_string(found.size()) + " well-separated lines instead of 27");

  // Conjugation pairing before sorting, then realify the fixed lines.
  std::vector<int> pair(27, -1);
  for (int i = 0; i < 27; ++i) {
    const Plucker c = conjugate(found[i]);
    int best = 0;
    double bd = 2;
    for (int j = 0; j < 27; ++j) {
      const double d = distance(c, found[j]);
      if (d < bd) bd = d, best = j;
    }
    if (bd > opts.separation)
      throw Error(ErrorKind::NearDiscriminant, "line set is not closed under conjugation");
    pair[i] = best;
  }
  for (int i = 0; i < 27; ++i)
    if (pair[pair[i]] != i)
      throw Error(ErrorKind::NearDiscriminant, "conjugation matching is not an involution");

  std::vector<PluckerLine> lines(27);
  for (int i = 0; i < 27; ++i) {
    const bool real = pair[i] == i;
    lines[i].p = real ? realify(found[i]) : found[i];
    lines[i].is_real = real;
    lines[i].residual = line_residual(t, lines[i].p);
  }

  std::vector<int> order(27);
  for (int i = 0; i < 27; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return sort_key(lines[a].p) < sort_key(lines[b].p);
  });
  std::vector<int> rank(27);
  for (int r = 0; r < 27; ++r) rank[order[r]] = r;

  LineSet ls;
  ls.lines.resize(27);
  ls.conj_pairing.resize(27);
  for (int r = 0; r < 27; ++r) {
    ls.lines[r] = lines[order[r]];
    ls.conj_pairing[r] = rank[pair[order[r]]];
    if (ls.lines[r].is_real) ++ls.real_count;
  }
  return ls;
}

std::vector<PluckerLine> real_lines(const LineSet& ls) {
  std::vector<PluckerLine> out;
  for (std::size_t i = 0; i < ls.lines.size(); ++i)
    if (ls.conj_pairing[i] == static_cast<int>(i)) {
      PluckerLine l = ls.lines[i];
      l.p = realify(l.p);
      out.push_back(l);
    }
  return out;
}

namespace {

constexpr double kMeetTol = 1e-10;
constexpr double kSkewTol = 1e-8;

}  // namespace

std::vector<std::vector<int>> incidence_graph(const LineSet& ls) {
  const int n = static_cast<int>(ls.lines.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = std::abs(incidence(ls.lines[i].p, ls.lines[j].p));
      if (v > kMeetTol && v < kSkewTol)
        throw Error(ErrorKind::DegenerateConfiguration,
                    "ambiguous incidence between lines " + std::to_string(i) + " and " +
                        std::to_string(j));
      if (v <= kMeetTol) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  for (int i = 0; i < n; ++i)
    if (adj[i].size() != 10)
      throw Error(ErrorKind::DegenerateConfiguration,
                  "line " + std::to_string(i) + " meets " + std::to_string(adj[i].size()) +
                      " others instead of 10");
  return adj;
}

std::vector<Triple> tritangent_triples(const LineSet& ls) {
  // Two meeting lines span a plane whose residual conic is a third line;
  // any line meeting both lies in that plane, so triples are triangles.
  const auto adj = incidence_graph(ls);
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<bool>> meets(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j : adj[i]) meets[i][j] = true;
  std::vector<Triple> out;
  std::vector<int> per_line(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!meets[a][b]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!meets[a][c] || !meets[b][c]) continue;
        std::array<int, 3> img{ls.conj_pairing[a], ls.conj_pairing[b], ls.conj_pairing[c]};
        std::sort(img.begin(), img.end());
        out.push_back({{a, b, c}, img == std::array<int, 3>{a, b, c}});
        ++per_line[a], ++per_line[b], ++per_line[c];
      }
    }
  if (out.size() != 45 ||
      std::any_of(per_line.begin(), per_line.end(), [](int k) { return k != 5; }))
    throw Error(ErrorKind::DegenerateConfiguration,
                "found " + std::to_string(out.size()) + " coplanar triples instead of 45");
  return out;
}

Vec4 line_plane_point(const PluckerLine& line, const Vec4& plane) {
  Vec4 x = meet_plane(line.p, plane);
  const double n = norm(x);
  if (n < 1e-10 * norm(line.p) * norm(plane))
    throw Error(ErrorKind::LineInPlane, "line lies in the plane");
  int first = 0;
  while (std::abs(x[first]) <= 1e-6 * n) ++first;
  const cd phase = std::conj(x[first]) / std::abs(x[first]) / n;
  for (auto& v : x) v *= phase;
  return x;
}

}  // namespace affcubic::lines
