#include <algorithm>
#include <cmath>
#include <random>

#include "affcubic/algebra/resultant.hpp"
#include "affcubic/curve/curve.hpp"
#include "affcubic/curve/detail.hpp"
#include "affcubic/error.hpp"

namespace affcubic::curve {

using namespace detail;

namespace {

using Sym3 = std::array<std::array<Rational, 3>, 3>;

Sym3 symmetric_matrix(const Poly& q) {
  Sym3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<int> e(3, 0);
      ++e[i];
      ++e[j];
      s[i][j] = i == j ? q.coefficient(e) : q.coefficient(e) / 2;
    }
  return s;
}

const std::array<std::vector<int>, 6> kConicMonomials{
    std::vector<int>{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};

}  // namespace

Point3 normalize(const Point3& p) {
  double n = 0;
  for (const auto& v : p) n += std::norm(v);
  n = std::sqrt(n);
  Point3 q = p;
  for (auto& v : q) v /= n;
  for (const auto& v : q)
    if (std::abs(v) > 1e-8) {
      const cd phase = std::conj(v) / std::abs(v);
      for (auto& w : q) w *= phase;
      break;
    }
  return q;
}

double distance(const Point3& a, const Point3& b) {
  const Point3 u = normalize(a), v = normalize(b);
  cd dot = 0;
  for (int k = 0; k < 3; ++k) dot += std::conj(u[k]) * v[k];
  double s = 0;
  for (int k = 0; k < 3; ++k) s += std::norm(v[k] - dot * u[k]);
  return std::sqrt(s);
}

Conic make_conic(const Poly& form) {
  if (form.nvars() != 3 || form.is_zero() || !form.is_homogeneous() || form.degree() != 2)
    throw Error(ErrorKind::InvalidArgument, "expected a ternary quadratic form");
  const Sym3 s = symmetric_matrix(form);
  const Rational d1 = s[0][0];
  const Rational d2 = s[0][0] * s[1][1] - s[0][1] * s[0][1];
  const Rational d3 = determinant(s);
  Conic c;
  c.form = form;
  c.degenerate = d3 == 0;
  c.empty_real_locus = (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 > 0 && d3 < 0);
  return c;
}

namespace {

struct Chart {
  Matrix3 m;
  Poly b, c;  // affine parts
  UPoly r;    // eliminant in x
};

// Newton on the pair (b, c) in (x, y).
void polish(const Poly& b, const Poly& c, cd& x, cd& y) {
  const Poly bx = b.derivative(0), by = b.derivative(1), cx = c.derivative(0),
             cy = c.derivative(1);
  for (int it = 0; it < 5; ++it) {
    const std::array<cd, 3> p{x, y, 1.0};
    const cd f = b.eval<cd>(p), g = c.eval<cd>(p);
    const cd a11 = bx.eval<cd>(p), a12 = by.eval<cd>(p), a21 = cx.eval<cd>(p),
             a22 = cy.eval<cd>(p);
    const cd det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-300) return;
    x -= (a22 * f - a12 * g) / det;
    y -= (a11 * g - a21 * f) / det;
  }
}

cd fiber_y(const Poly& b, const Poly& c, cd x) {
  // Roots of the conic's fiber; keep the one on the cubic.
  std::vector<cd> coeffs(3);
  for (int k = 0; k < 3; ++k) {
    const UPoly u = UPoly::from_poly(b.coeff_in(1, k), 0);
    cd v = 0, pw = 1;
    for (const auto& a : u.coeffs()) v += a.get_d() * pw, pw *= x;
    coeffs[k] = v;
  }
  std::vector<cd> ys;
  if (std::abs(coeffs[2]) > 0) {
    ys = complex_roots(coeffs);
  } else {
    ys = {-coeffs[0] / coeffs[1]};
  }
  cd best = ys[0];
  double bv = 1e300;
  for (const cd& y : ys) {
    const std::array<cd, 3> p{x, y, 1.0};
    const double v = std::abs(c.eval<cd>(p));
    if (v < bv) bv = v, best = y;
  }
  return best;
}

}  // namespace

SixTuple conic_cubic_intersection(const Conic& conic, const PlaneCubicAnalysis& cubic,
                                  std::uint64_t seed) {
  {
    const Poly b = affine_part(apply(conic.form, cubic.transform));
    const Poly c = affine_part(cubic.chart_cubic);
    if (eliminate(b, c, 1, 0).is_zero())
      throw Error(ErrorKind::SharedComponent, "conic and cubic share a component");
  }
  std::mt19937_64 rng(seed);
  std::optional<Chart> chart;
  bool transversal = false;
  for (int attempt = 0; attempt < 8 && !transversal; ++attempt) {
    const Matrix3 m = random_transform(rng);
    const Poly c2 = apply(cubic.cubic, m), b2 = apply(conic.form, m);
    if (c2.coefficient({0, 3, 0}) == 0 || b2.coefficient({0, 2, 0}) == 0) continue;
    Chart ch{m, affine_part(b2), affine_part(c2), {}};
    ch.r = eliminate(ch.b, ch.c, 1, 0);
    if (ch.r.degree() != 6) continue;
    transversal = is_squarefree(ch.r);
    chart = std::move(ch);
  }
  if (!chart) throw Error(ErrorKind::InternalInconsistency, "no admissible chart for B.C");

  SixTuple out;
  out.transversal = transversal;
  auto emit = [&](cd x, int mult, bool real) {
    cd y = fiber_y(chart->b, chart->c, x);
    if (mult == 1) polish(chart->b, chart->c, x, y);
    if (real) {
      x = x.real();
      y = std::abs(y.imag()) < 1e-6 * (1 + std::abs(y)) ? cd(y.real()) : y;
      real = y.imag() == 0;
    }
    IntersectionPoint ip;
    const std::array<cd, 3> a{x, y, 1.0};
    Point3 p{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) p[i] += chart->m[i][j].get_d() * a[j];
    ip.point = normalize(p);
    ip.multiplicity = mult;
    ip.real = real;
    if (real) {
      ip.point = {ip.point[0].real(), ip.point[1].real(), ip.point[2].real()};
      const auto loc = locate(cubic, {ip.point[0].real(), ip.point[1].real(), ip.point[2].real()},
                              1e-7);
      ip.component = loc.component;
      out.real_count += mult;
      (loc.on_oval ? out.on_oval : out.on_pseudoline) += mult;
    }
    out.points.push_back(ip);
  };
  // Multiplicities are exact: roots of the k-th square-free factor have
  // multiplicity k in the eliminant.
  for (const auto& [g, k] : squarefree_factorization(chart->r)) {
    if (g.degree() < 1) continue;
    const auto reals = isolate_squarefree(g);
    for (const auto& iv : reals) emit(refine(g, iv, Rational("1/10000000000000000", 10)).approx(), k, true);
    const int complex_count = g.degree() - static_cast<int>(reals.size());
    if (complex_count == 0) continue;
    auto roots = complex_roots(g);
    std::sort(roots.begin(), roots.end(), [](cd a, cd b) { return a.imag() > b.imag(); });
    for (int j = 0; j < complex_count / 2; ++j) {
      emit(roots[j], k, false);
      emit(std::conj(roots[j]), k, false);
    }
  }
  return out;
}

Conic conic_through_five(std::span<const std::array<Rational, 3>> points) {
  if (points.size() != 5) throw Error(ErrorKind::InvalidArgument, "need five points");
  std::vector<std::array<Rational, 6>> a(5);
  for (int r = 0; r < 5; ++r)
    for (int k = 0; k < 6; ++k) {
      Rational v = 1;
      for (int i = 0; i < 3; ++i)
        for (int e = 0; e < kConicMonomials[k][i]; ++e) {
          Rational x = points[r][i];
          x.canonicalize();
          v *= x;
        }
      a[r][k] = v;
    }
  // Reduced row echelon form.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < 6 && row < 5; ++col) {
    int piv = row;
    while (piv < 5 && a[piv][col] == 0) ++piv;
    if (piv == 5) continue;
    std::swap(a[row], a[piv]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (int r = 0; r < 5; ++r)
      if (r != row && a[r][col] != 0) {
        const Rational f = a[r][col];
        for (int k = 0; k < 6; ++k) a[r][k] -= f * a[row][k];
      }
    pivot_col.push_back(col);
    ++row;
  }
  if (row < 5) throw Error(ErrorKind::RankDeficient, "five points impose dependent conditions");
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::array<Rational, 6> v;
  v[free_col] = 1;
  for (int r = 0; r < 5; ++r) v[pivot_col[r]] = -a[r][free_col];
  // Primitive integer coefficients, first nonzero positive.
  Integer den = 1, num = 0;
  for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (auto& c : v) c *= den;
  for (const auto& c : v) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  const int s = sign(*std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; }));
  Poly form(3);
  for (int k = 0; k < 6; ++k) form.add_term(kConicMonomials[k], v[k] * s / num);
  return make_conic(form);
}

ConicCoeffs conic_through_five(std::span<const Point3> points, double tol) {
  if (points.size() != 5) throw Error(ErrorKind::InvalidArgument, "need five points");
  std::array<std::array<cd, 6>, 5> a;
  for (int r = 0; r < 5; ++r) {
    const Point3 p = normalize(points[r]);
    for (int k = 0; k < 6; ++k) {
      cd v = 1;
      for (int i = 0; i < 3; ++i)
        for (int e = 0; e < kConicMonomials[k][i]; ++e) v *= p[i];
      a[r][k] = v;
    }
  }
  // Gaussian elimination with full pivoting.
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  for (int r = 0; r < 5; ++r) {
    int br = r, bc = r;
    for (int i = r; i < 5; ++i)
      for (int j = r; j < 6; ++j)
        if (std::abs(a[i][perm[j]]) > std::abs(a[br][perm[bc]])) br = i, bc = j;
    if (std::abs(a[br][perm[bc]]) < tol)
      throw Error(ErrorKind::RankDeficient, "five points impose dependent conditions");
    std::swap(a[r], a[br]);
    std::swap(perm[r], perm[bc]);
    for (int i = r + 1; i < 5; ++i) {
      const cd f = a[i][perm[r]] / a[r][perm[r]];
      for (int j = r; j < 6; ++j) a[i][perm[j]] -= f * a[r][perm[j]];
    }
  }
  ConicCoeffs v{};
  v[perm[5]] = 1;
  for (int r = 4; r >= 0; --r) {
    cd s = 0;
    for (int j = r + 1; j < 6; ++j) s += a[r][perm[j]] * v[perm[j]];
    v[perm[r]] = -s / a[r][perm[r]];
  }
  double n = 0;
  for (const auto& c : v) n += std::norm(c);
  for (auto& c : v) c /= std::sqrt(n);
  return v;
}

namespace {

using CPoly = std::vector<cd>;

CPoly mul(const CPoly& a, const CPoly& b) {
  CPoly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

cd bilinear(const ConicCoeffs& q, const Point3& u, const Point3& v) {
  const cd s[3][3] = {{q[0], q[1] / 2.0, q[2] / 2.0},
                      {q[1] / 2.0, q[3], q[4] / 2.0},
                      {q[2] / 2.0, q[4] / 2.0, q[5]}};
  cd sum = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sum += u[i] * s[i][j] * v[j];
  return sum;
}

// Value and gradient of a ternary form at p.
cd eval_with_gradient(const Poly& f, const Point3& p, std::array<cd, 3>& grad) {
  cd value = 0;
  grad = {0.0, 0.0, 0.0};
  for (const auto& [e, coef] : f.terms()) {
    const cd c = coef.get_d();
    cd m = c;
    for (int i = 0; i < 3; ++i) m *= std::pow(p[i], e[i]);
    value += m;
    for (int j = 0; j < 3; ++j) {
      if (e[j] == 0) continue;
      cd d = c * static_cast<double>(e[j]);
      for (int i = 0; i < 3; ++i) d *= std::pow(p[i], i == j ? e[i] - 1 : e[i]);
      grad[j] += d;
    }
  }
  return value;
}

// Newton steps on {cubic = 0, conic = 0} in the affine chart of the largest
// coordinate of p.
Point3 polish(const Poly& cubic, const ConicCoeffs& q, Point3 p) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(p[i]) > std::abs(p[k])) k = i;
  for (int i = 0; i < 3; ++i)
    if (i != k) p[i] /= p[k];
  p[k] = 1;
  const int u = (k + 1) % 3, v = (k + 2) % 3;
  for (int it = 0; it < 4; ++it) {
    std::array<cd, 3> gc;
    const cd fc = eval_with_gradient(cubic, p, gc);
    const cd fq = bilinear(q, p, p);
    std::array<cd, 3> gq{};
    for (int i = 0; i < 3; ++i) {
      Point3 e{};
      e[i] = 1;
      gq[i] = 2.0 * bilinear(q, e, p);
    }
    const cd det = gc[u] * gq[v] - gc[v] * gq[u];
    if (std::abs(det) < 1e-14) break;
    p[u] -= (fc * gq[v] - fq * gc[v]) / det;
    p[v] -= (gc[u] * fq - gq[u] * fc) / det;
  }
  return normalize(p);
}

}  // namespace

Point3 residual_point(const PlaneCubicAnalysis& c, std::span<const Point3> five) {
  return residual_point(c.cubic, five);
}

Point3 residual_point(const Poly& cubic, std::span<const Point3> five) {
  if (five.size() != 5) throw Error(ErrorKind::InvalidArgument, "need five points");
  const double cn = coefficient_norm(cubic);
  for (const auto& p : five) {
    const Point3 u = normalize(p);
    if (std::abs(cubic.eval<cd>(u)) > 1e-8 * cn)
      throw Error(ErrorKind::NotOnCurve, "point is not on the curve");
  }
  const ConicCoeffs q = conic_through_five(five);
  const Point3 p1 = normalize(five[0]);

  // Lines through p1 in direction u + t v meet the conic again at
  // q(t) = B(d) p1 - 2 b(p1, d) d, a conic parametrization.
  const Point3 dirs[3][2] = {
      {{cd(0.37, 0.11), cd(-0.52, 0.83), cd(0.29, -0.61)},
       {cd(0.71, -0.23), cd(0.13, 0.47), cd(-0.88, 0.05)}},
      {{cd(-0.44, 0.62), cd(0.91, 0.17), cd(0.08, -0.35)},
       {cd(0.26, 0.74), cd(-0.63, -0.12), cd(0.55, 0.39)}},
      {{cd(0.12, -0.93), cd(0.48, 0.21), cd(-0.67, 0.58)},
       {cd(-0.81, 0.09), cd(0.34, -0.72), cd(0.19, 0.66)}}};
  for (const auto& [u, v] : dirs) {
    const cd buu = bilinear(q, u, u), buv = bilinear(q, u, v), bvv = bilinear(q, v, v);
    const cd pu = bilinear(q, p1, u), pv = bilinear(q, p1, v);
    std::array<CPoly, 3> qt;
    for (int i = 0; i < 3; ++i)
      qt[i] = {buu * p1[i] - 2.0 * pu * u[i], 2.0 * buv * p1[i] - 2.0 * (pu * v[i] + pv * u[i]),
               bvv * p1[i] - 2.0 * pv * v[i]};
    CPoly f(7, 0.0);
    for (const auto& [e, coef] : cubic.terms()) {
      CPoly term{coef.get_d()};
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < e[i]; ++k) term = mul(term, qt[i]);
      for (std::size_t k = 0; k < term.size(); ++k) f[k] += term[k];
    }
    double fmax = 0;
    for (const auto& x : f) fmax = std::max(fmax, std::abs(x));
    if (std::abs(f[6]) < 1e-8 * fmax) continue;  // a root near t = infinity

    std::vector<Point3> cands;
    for (const cd& t : complex_roots(f)) {
      Point3 p;
      for (int i = 0; i < 3; ++i) p[i] = qt[i][0] + t * (qt[i][1] + t * qt[i][2]);
      cands.push_back(normalize(p));
    }
    std::vector<bool> used(cands.size(), false);
    for (const auto& g : five) {
      int best = -1;
      double bd = 1e300;
      for (std::size_t k = 0; k < cands.size(); ++k)
        if (!used[k] && distance(g, cands[k]) < bd) bd = distance(g, cands[k]), best = static_cast<int>(k);
      if (bd > 1e-5)
        throw Error(ErrorKind::MultiplicityAmbiguity, "given point not found in B.C");
      used[best] = true;
    }
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (!used[k]) return polish(cubic, q, cands[k]);
  }
  throw Error(ErrorKind::MultiplicityAmbiguity, "no admissible conic parametrization");
}

}  // namespace affcubic::curve
