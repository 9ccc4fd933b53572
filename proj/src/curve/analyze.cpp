#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "affcubic/algebra/resultant.hpp"
#include "affcubic/curve/curve.hpp"
#include "affcubic/curve/detail.hpp"
#include "affcubic/error.hpp"

namespace affcubic::curve {

namespace detail {

Matrix3 random_transform(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& v : row) v = d(rng);
    if (determinant(m) != 0) return m;
  }
}

Rational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 inverse(const Matrix3& m) {
  const Rational det = determinant(m);
  Matrix3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  return inv;
}

Poly apply(const Poly& f, const Matrix3& m) {
  std::vector<Poly> sub;
  for (int i = 0; i < 3; ++i) {
    Poly row(3);
    for (int j = 0; j < 3; ++j)
      if (m[i][j] != 0) row += Poly::constant(3, m[i][j]) * Poly::variable(3, j);
    sub.push_back(row);
  }
  return f.compose(sub);
}

Poly affine_part(const Poly& f) { return f.substitute(2, Poly::constant(3, 1)); }

std::array<UPoly, 4> y_coefficients(const Poly& affine) {
  std::array<UPoly, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = UPoly::from_poly(affine.coeff_in(1, k), 0);
  return out;
}

double coefficient_norm(const Poly& f) {
  double s = 0;
  for (const auto& [e, c] : f.terms()) s += std::abs(c.get_d());
  return s;
}

}  // namespace detail

namespace {

using namespace detail;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Sign of (simple root - double root) of the chart cubic in y over the
// critical value isolated by iv.
int fold_orientation(const std::array<UPoly, 4>& yc, const UPoly& disc, const Interval& iv) {
  const Rational& a = yc[3][0];
  const UPoly& b = yc[2];
  const UPoly& e = yc[1];
  const UPoly& f = yc[0];
  // Remainder of the cubic by its y-derivative: s1 y + s0, vanishing at the
  // double root.
  const UPoly s1 = e * (6 * a) - b * b * Rational(2);
  const UPoly s0 = f * (9 * a) - b * e;
  const UPoly n = s0 * (3 * a) - b * s1;
  const int sn = sign_at_root(disc, n, iv), ss = sign_at_root(disc, s1, iv);
  if (sn == 0 || ss == 0)
    throw Error(ErrorKind::InternalInconsistency, "degenerate fold in sweep");
  return sn * ss * sign(a);
}

UPoly fiber(const std::array<UPoly, 4>& yc, const Rational& x) {
  std::vector<Rational> c(4);
  for (int k = 0; k < 4; ++k) c[k] = yc[k].eval(x);
  return UPoly(c);
}

bool try_chart(const Poly& cubic, const Matrix3& m, PlaneCubicAnalysis& out) {
  const Poly cm = apply(cubic, m);
  if (cm.coefficient({0, 3, 0}) == 0) return false;
  const Poly aff = affine_part(cm);
  const UPoly disc = eliminate(aff, aff.derivative(1), 1, 0);
  if (disc.degree() != 6 || !is_squarefree(disc)) return false;
  out.transform = m;
  out.chart_cubic = cm;
  out.y_coeffs = y_coefficients(aff);
  out.discriminant = disc;
  return true;
}

}  // namespace

PlaneCubicAnalysis analyze_cubic(const Poly& cubic, std::uint64_t seed) {
  if (cubic.nvars() != 3 || !cubic.is_homogeneous() || cubic.degree() != 3)
    throw Error(ErrorKind::InvalidArgument, "expected a ternary cubic form");
  PlaneCubicAnalysis a;
  a.cubic = cubic;
  std::mt19937_64 rng(seed);
  bool found = false;
  for (int attempt = 0; attempt < 12 && !found; ++attempt)
    found = try_chart(cubic, random_transform(rng), a);
  if (!found) throw Error(ErrorKind::SingularCurve, "cubic curve is singular");

  a.critical = isolate_squarefree(a.discriminant);
  for (const auto& iv : a.critical)
    a.critical_approx.push_back(refine(a.discriminant, iv, Rational("1/1000000000000000", 10)).approx());

  // Cells and their branch counts.
  const std::size_t k = a.critical.size();
  std::vector<int> offset;
  int arcs = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    Cell cell;
    if (i > 0) cell.lo = a.critical[i - 1].hi;
    if (i < k) cell.hi = a.critical[i].lo;
    if (cell.lo && cell.hi)
      cell.sample = (*cell.lo + *cell.hi) / 2;
    else if (cell.lo)
      cell.sample = *cell.lo + 1;
    else if (cell.hi)
      cell.sample = *cell.hi - 1;
    const int n = count_distinct_real_roots(fiber(a.y_coeffs, cell.sample));
    if (n != 1 && n != 3) throw Error(ErrorKind::InternalInconsistency, "bad branch count");
    cell.branch_component.assign(n, -1);
    offset.push_back(arcs);
    arcs += n;
    a.sweep.push_back(std::move(cell));
  }

  UnionFind uf(arcs);
  for (std::size_t i = 0; i < k; ++i) {
    const int nl = static_cast<int>(a.sweep[i].branch_component.size());
    const int nr = static_cast<int>(a.sweep[i + 1].branch_component.size());
    if (nl == nr) throw Error(ErrorKind::InternalInconsistency, "branch count did not change");
    const bool left_three = nl == 3;
    const int three = offset[left_three ? i : i + 1];
    const int one = offset[left_three ? i + 1 : i];
    // Simple root above the double root: the lower two branches fold.
    if (fold_orientation(a.y_coeffs, a.discriminant, a.critical[i]) > 0) {
      uf.unite(three, three + 1);
      uf.unite(three + 2, one);
    } else {
      uf.unite(three + 1, three + 2);
      uf.unite(three, one);
    }
  }
  // Through the points at infinity: y ~ m x reverses order between the ends.
  const int n_end = static_cast<int>(a.sweep.back().branch_component.size());
  if (static_cast<int>(a.sweep.front().branch_component.size()) != n_end)
    throw Error(ErrorKind::InternalInconsistency, "end branch counts differ");
  for (int j = 0; j < n_end; ++j) uf.unite(offset[k] + j, offset[0] + n_end - 1 - j);

  // Relabel: the component meeting a vertical line an odd number of times is
  // the pseudoline.
  std::vector<int> roots;
  for (int v = 0; v < arcs; ++v)
    if (uf.find(v) == v) roots.push_back(v);
  a.component_count = static_cast<int>(roots.size());
  if (a.component_count > 2)
    throw Error(ErrorKind::InternalInconsistency, "more than two components");
  const auto& first = a.sweep.front().branch_component;
  int pseudo_root = -1;
  for (int r : roots) {
    int c = 0;
    for (std::size_t j = 0; j < first.size(); ++j) c += uf.find(offset[0] + j) == r;
    if (c % 2 == 1) pseudo_root = r;
  }
  if (pseudo_root < 0) throw Error(ErrorKind::InternalInconsistency, "no one-sided component");
  for (std::size_t i = 0; i <= k; ++i) {
    auto& bc = a.sweep[i].branch_component;
    for (std::size_t j = 0; j < bc.size(); ++j)
      bc[j] = uf.find(offset[i] + j) == pseudo_root ? kPseudoline : kOval;
    if (std::count(bc.begin(), bc.end(), kOval) % 2 != 0)
      throw Error(ErrorKind::InternalInconsistency, "oval parity violated");
  }
  if (a.component_count == 2) a.oval_id = kOval;
  return a;
}

namespace {

// Real roots of a real cubic given by double coefficients, ascending; keeps
// the `count` roots closest to the real axis.
std::vector<double> real_fiber(const std::array<double, 4>& c, int count) {
  std::vector<cd> coeffs(c.begin(), c.end());
  auto roots = complex_roots(coeffs);
  std::sort(roots.begin(), roots.end(),
            [](cd u, cd v) { return std::abs(u.imag()) < std::abs(v.imag()); });
  std::vector<double> out;
  for (int j = 0; j < count; ++j) out.push_back(roots[j].real());
  std::sort(out.begin(), out.end());
  return out;
}

int nearest(const std::vector<double>& v, double y) {
  int best = 0;
  for (std::size_t j = 1; j < v.size(); ++j)
    if (std::abs(v[j] - y) < std::abs(v[best] - y)) best = static_cast<int>(j);
  return best;
}

}  // namespace

Location locate(const PlaneCubicAnalysis& a, const RealPoint3& p, double tol) {
  const double pn = std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
  if (pn == 0) throw Error(ErrorKind::InvalidArgument, "zero point");
  const std::array<double, 3> unit{p[0] / pn, p[1] / pn, p[2] / pn};
  if (std::abs(a.cubic.eval<double>(unit)) > tol * coefficient_norm(a.cubic))
    throw Error(ErrorKind::NotOnCurve, "point is not on the curve");

  const Matrix3 inv = inverse(a.transform);
  std::array<double, 3> q{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q[i] += inv[i][j].get_d() * unit[j];
  auto result = [&](int comp) { return Location{comp, comp == kOval}; };

  const double qn = std::max({std::abs(q[0]), std::abs(q[1]), std::abs(q[2])});
  if (std::abs(q[2]) < 1e-12 * qn) {
    // Point at infinity (1 : m : 0): rightmost cell, branches ordered by m.
    std::array<double, 4> c{};
    for (int k = 0; k < 4; ++k) c[k] = a.chart_cubic.coefficient({3 - k, k, 0}).get_d();
    const auto& last = a.sweep.back().branch_component;
    const auto ms = real_fiber(c, static_cast<int>(last.size()));
    return result(last[nearest(ms, q[1] / q[0])]);
  }
  double x = q[0] / q[2];
  const double y = q[1] / q[2];
  std::size_t cell = 0;
  while (cell < a.critical_approx.size() && a.critical_approx[cell] < x) ++cell;
  // Next to a critical value, step into the three-branch side: the folding
  // pair shares a component, so the nearest branch there is correct.
  for (std::size_t i = 0; i < a.critical_approx.size(); ++i) {
    const double r = a.critical_approx[i];
    const double gap = 1e-7 * (1 + std::abs(r));
    if (std::abs(x - r) < gap) {
      const bool left_three = a.sweep[i].branch_component.size() == 3;
      x = left_three ? r - 10 * gap : r + 10 * gap;
      cell = left_three ? i : i + 1;
    }
  }
  std::array<double, 4> c;
  for (int k = 0; k < 4; ++k) c[k] = a.y_coeffs[k].eval(x);
  const auto& bc = a.sweep[cell].branch_component;
  const auto ys = real_fiber(c, static_cast<int>(bc.size()));
  return result(bc[nearest(ys, y)]);
}

}  // namespace affcubic::curve
