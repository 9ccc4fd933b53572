#include "affcubic/lines/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "affcubic/error.hpp"

namespace affcubic::lines {

CubicTensor::CubicTensor(const Poly& cubic) {
  if (cubic.nvars() != 4 || !cubic.is_homogeneous() || cubic.degree() != 3)
    throw Error(ErrorKind::InvalidArgument, "expected a cubic form in four variables");
  double largest = 0;
  for (const auto& [e, c] : cubic.terms()) largest = std::max(largest, std::abs(c.get_d()));
  scale_ = largest;
  for (const auto& [e, c] : cubic.terms()) {
    std::array<int, 3> idx{};
    int n = 0;
    for (int v = 0; v < 4; ++v)
      for (int r = 0; r < e[v]; ++r) idx[n++] = v;
    std::sort(idx.begin(), idx.end());
    int perms = 0;
    do {
      ++perms;
    } while (std::next_permutation(idx.begin(), idx.end()));
    const double value = c.get_d() / largest / perms;
    do {
      t_[idx[0] * 16 + idx[1] * 4 + idx[2]] += value;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

cd CubicTensor::operator()(const Vec4& u, const Vec4& v, const Vec4& w) const {
  cd sum = 0;
  for (int p = 0; p < 4; ++p) {
    if (u[p] == cd(0)) continue;
    cd inner = 0;
    for (int q = 0; q < 4; ++q) {
      cd row = 0;
      for (int r = 0; r < 4; ++r) row += t_[p * 16 + q * 4 + r] * w[r];
      inner += v[q] * row;
    }
    sum += u[p] * inner;
  }
  return sum;
}

std::array<LineChart, 6> LineChart::all() {
  std::array<LineChart, 6> charts{};
  int n = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int rest[2], m = 0;
      for (int v = 0; v < 4; ++v)
        if (v != i && v != j) rest[m++] = v;
      charts[n++] = LineChart{i, j, rest[0], rest[1]};
    }
  return charts;
}

std::pair<Vec4, Vec4> LineChart::points(const Vec4& x) const {
  Vec4 p{}, q{};
  p[i] = 1;
  p[k] = x[0];
  p[l] = x[1];
  q[j] = 1;
  q[k] = x[2];
  q[l] = x[3];
  return {p, q};
}

Vec4 LineChart::coordinates(const Plucker& pl) const {
  Vec4 ej{}, ei{};
  ej[j] = 1;
  ei[i] = 1;
  Vec4 p = meet_plane(pl, ej);  // on the line with x_j = 0
  Vec4 q = meet_plane(pl, ei);  // on the line with x_i = 0
  const cd pi = p[i], qj = q[j];
  return {p[k] / pi, p[l] / pi, q[k] / qj, q[l] / qj};
}

void LineChart::evaluate(const CubicTensor& t, const Vec4& x, Vec4& value,
                         std::array<Vec4, 4>* jac) const {
  auto [p, q] = points(x);
  value = {t(p, p, p), t(p, p, q), t(p, q, q), t(q, q, q)};
  if (jac == nullptr) return;
  Vec4 ek{}, el{};
  ek[k] = 1;
  el[l] = 1;
  auto& J = *jac;
  J[0] = {3.0 * t(ek, p, p), 3.0 * t(el, p, p), 0.0, 0.0};
  J[1] = {2.0 * t(ek, p, q), 2.0 * t(el, p, q), t(p, p, ek), t(p, p, el)};
  J[2] = {t(ek, q, q), t(el, q, q), 2.0 * t(p, q, ek), 2.0 * t(p, q, el)};
  J[3] = {0.0, 0.0, 3.0 * t(ek, q, q), 3.0 * t(el, q, q)};
}

namespace {

// Solves A y = b in place (b becomes y); false if A is numerically singular.
bool solve4(std::array<Vec4, 4> a, Vec4& b) {
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-300) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = c + 1; r < 4; ++r) {
      const cd f = a[r][c] / a[c][c];
      for (int m = c; m < 4; ++m) a[r][m] -= f * a[c][m];
      b[r] -= f * b[c];
    }
  }
  for (int c = 3; c >= 0; --c) {
    for (int m = c + 1; m < 4; ++m) b[c] -= a[c][m] * b[m];
    b[c] /= a[c][c];
  }
  return true;
}

double vnorm(const Vec4& v) { return norm(v); }

struct Homotopy {
  const CubicTensor& t;
  const LineChart& chart;
  cd gamma;

  // H(x, s) and its partial derivatives.
  void eval(const Vec4& x, double s, Vec4& h, std::array<Vec4, 4>& hx, Vec4& ht) const {
    Vec4 g;
    std::array<Vec4, 4> gj;
    chart.evaluate(t, x, g, &gj);
    for (int r = 0; r < 4; ++r) {
      const cd g0 = x[r] * x[r] * x[r] - 1.0;
      h[r] = (1 - s) * gamma * g0 + s * g[r];
      ht[r] = g[r] - gamma * g0;
      for (int c = 0; c < 4; ++c) hx[r][c] = s * gj[r][c];
      hx[r][r] += (1 - s) * gamma * 3.0 * x[r] * x[r];
    }
  }
};

}  // namespace

std::vector<Vec4> start_points() {
  const cd omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  const cd roots[3] = {1.0, omega, omega * omega};
  std::vector<Vec4> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) out.push_back({roots[a], roots[b], roots[c], roots[d]});
  return out;
}

PathResult track_path(const CubicTensor& t, const LineChart& chart, cd gamma, const Vec4& start,
                      const TrackerOptions& opts) {
  Homotopy hom{t, chart, gamma};
  PathResult res;
  Vec4 x = start;
  double s = 0, h = 0.01;
  int streak = 0;
  Vec4 hv, ht;
  std::array<Vec4, 4> hx;
  while (s < 1) {
    if (++res.steps > opts.max_steps) return res;
    h = std::min(h, 1 - s);
    // Euler predictor along dx/ds = -Hx^{-1} Ht.
    hom.eval(x, s, hv, hx, ht);
    Vec4 dx = ht;
    if (!solve4(hx, dx)) return res;
    Vec4 xp;
    for (int m = 0; m < 4; ++m) xp[m] = x[m] - h * dx[m];
    const double sp = (h >= 1 - s) ? 1.0 : s + h;
    // Newton corrector at the new parameter value.
    bool ok = false;
    for (int it = 0; it < 4; ++it) {
      hom.eval(xp, sp, hv, hx, ht);
      Vec4 delta = hv;
      if (!solve4(hx, delta)) break;
      const double dn = vnorm(delta), xn = 1 + vnorm(xp);
      if (it == 0 && dn > 0.05 * xn) break;
      for (int m = 0; m < 4; ++m) xp[m] -= delta[m];
      if (dn < 1e-9 * xn) {
        ok = true;
        break;
      }
    }
    if (ok) {
      x = xp;
      s = sp;
      if (++streak >= 3) {
        h = std::min(2 * h, opts.max_step);
        streak = 0;
      }
      if (vnorm(x) > opts.divergence) {
        res.status = PathStatus::Diverged;
        res.endpoint = x;
        return res;
      }
    } else {
      streak = 0;
      h /= 2;
      if (h < opts.min_step) {
        res.status = vnorm(x) > 1e4 ? PathStatus::Diverged : PathStatus::Failed;
        res.endpoint = x;
        return res;
      }
    }
  }
  res.endpoint = x;
  res.status = refine_newton(t, chart, res.endpoint, 1e-13) ? PathStatus::Converged
                                                            : PathStatus::Failed;
  return res;
}

bool refine_newton(const CubicTensor& t, const LineChart& chart, Vec4& x, double tol,
                   int max_iterations) {
  Vec4 g;
  std::array<Vec4, 4> j;
  for (int it = 0; it < max_iterations; ++it) {
    chart.evaluate(t, x, g, &j);
    const double scale = std::pow(1 + vnorm(x), 3);
    if (vnorm(g) < tol * scale) return true;
    Vec4 delta = g;
    if (!solve4(j, delta)) return false;
    for (int m = 0; m < 4; ++m) x[m] -= delta[m];
  }
  chart.evaluate(t, x, g, nullptr);
  return vnorm(g) < tol * std::pow(1 + vnorm(x), 3);
}

std::vector<PathResult> track_all_serial(const CubicTensor& t, std::span<const ChartTask> tasks,
                                         std::span<const cd> gammas,
                                         const TrackerOptions& opts) {
  const auto charts = LineChart::all();
  const auto starts = start_points();
  std::vector<PathResult> out(tasks.size());
  for (std::size_t n = 0; n < tasks.size(); ++n) {
    const auto& task = tasks[n];
    out[n] = track_path(t, charts[task.chart_index], gammas[task.chart_index],
                        starts[task.start_index], opts);
  }
  return out;
}

std::vector<PathResult> track_all_parallel(const CubicTensor& t,
                                           std::span<const ChartTask> tasks,
                                           std::span<const cd> gammas,
                                           const TrackerOptions& opts) {
  const auto charts = LineChart::all();
  const auto starts = start_points();
  std::vector<PathResult> out(tasks.size());
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long n = 0; n < count; ++n) {
    const auto& task = tasks[n];
    out[n] = track_path(t, charts[task.chart_index], gammas[task.chart_index],
                        starts[task.start_index], opts);
  }
  return out;
}

}  // namespace affcubic::lines
