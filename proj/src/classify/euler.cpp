#include <cmath>
#include <random>

#include "affcubic/algebra/resultant.hpp"
#include "affcubic/algebra/roots.hpp"
#include "affcubic/classify/classify.hpp"
#include "affcubic/error.hpp"

namespace affcubic::classify {

namespace {

using Matrix4 = std::array<std::array<int, 4>, 4>;

Poly apply4(const Poly& f, const Matrix4& m) {
  std::vector<Poly> sub;
  for (int i = 0; i < 4; ++i) {
    Poly row(4);
    for (int j = 0; j < 4; ++j)
      if (m[i][j] != 0) row += Poly::constant(4, m[i][j]) * Poly::variable(4, j);
    sub.push_back(row);
  }
  return f.compose(sub);
}

Rational det4(const Matrix4& m) {
  std::array<std::array<Rational, 4>, 4> a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
  Rational det = 1;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (p < 4 && a[p][c] == 0) ++p;
    if (p == 4) return 0;
    if (p != c) std::swap(a[p], a[c]), det = -det;
    det *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Fraction-free determinant over Q[t].
UPoly bareiss(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  UPoly prev = UPoly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return UPoly();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divmod(prev).first;
      m[i][k] = UPoly();
    }
    prev = m[k][k];
  }
  return negate ? m[n - 1][n - 1] * Rational(-1) : m[n - 1][n - 1];
}

// Discriminant (up to a constant) of the sections y = t x of g, via the
// resultant of the three partials of the section as a ternary cubic in
// (x, z, w): the determinant of their coefficients together with the
// gradient of their Jacobian determinant.
UPoly section_discriminant(const Poly& g) {
  // Variables of the pencil ring: X, Z, W, T.
  const Poly X = Poly::variable(4, 0), Z = Poly::variable(4, 1), W = Poly::variable(4, 2),
             T = Poly::variable(4, 3);
  const Poly s = g.compose(std::vector<Poly>{X, T * X, Z, W});
  std::array<Poly, 3> q{s.derivative(0), s.derivative(1), s.derivative(2)};
  std::array<std::array<Poly, 3>, 3> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = q[i].derivative(j);
  const Poly jac = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                   h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                   h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
  std::vector<Poly> rows{q[0], q[1], q[2], jac.derivative(0), jac.derivative(1),
                         jac.derivative(2)};
  const std::array<std::array<int, 3>, 6> mons{
      {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}};
  std::vector<std::vector<UPoly>> m(6, std::vector<UPoly>(6));
  for (int r = 0; r < 6; ++r) {
    std::vector<std::vector<Rational>> coeffs(6);
    for (const auto& [e, c] : rows[r].terms()) {
      for (int k = 0; k < 6; ++k)
        if (e[0] == mons[k][0] && e[1] == mons[k][1] && e[2] == mons[k][2]) {
          auto& v = coeffs[k];
          if (static_cast<int>(v.size()) <= e[3]) v.resize(e[3] + 1, Rational(0));
          v[e[3]] = c;
        }
    }
    for (int k = 0; k < 6; ++k) m[r][k] = UPoly(coeffs[k]);
  }
  return bareiss(m);
}

struct Node {
  int sign;  // +1 isolated real node (acnode), -1 crossing (crunode)
  double z, w;
};

Node locate_node(const Poly& g, const Rational& t) {
  const Poly Z = Poly::variable(2, 0), W = Poly::variable(2, 1);
  const Poly h = g.compose(std::vector<Poly>{Poly::constant(2, 1), Poly::constant(2, t), Z, W});
  const Poly hz = h.derivative(0), hw = h.derivative(1);
  const UPoly rz = eliminate(hz, hw, 1, 0);
  if (rz.is_zero()) throw Error(ErrorKind::InternalInconsistency, "degenerate section");
  double best = 1e300;
  Node node{0, 0, 0};
  for (const auto& z : complex_roots(rz)) {
    // Candidate w values: roots of hz(z, .).
    std::vector<std::complex<double>> wc(3, 0.0);
    for (const auto& [e, c] : hz.terms()) wc[e[1]] += c.get_d() * std::pow(z, e[0]);
    while (wc.size() > 1 && std::abs(wc.back()) < 1e-300) wc.pop_back();
    if (wc.size() < 2) continue;
    for (const auto& w : complex_roots(wc)) {
      const std::array<std::complex<double>, 2> p{z, w};
      const double err = std::abs(h.eval<std::complex<double>>(p)) +
                         std::abs(hw.eval<std::complex<double>>(p)) + std::abs(z.imag()) +
                         std::abs(w.imag());
      if (err < best) {
        best = err;
        const std::array<double, 2> r{z.real(), w.real()};
        const double hzz = h.derivative(0).derivative(0).eval<double>(r);
        const double hww = h.derivative(1).derivative(1).eval<double>(r);
        const double hzw = h.derivative(0).derivative(1).eval<double>(r);
        const double det = hzz * hww - hzw * hzw;
        node = {det > 0 ? 1 : (det < 0 ? -1 : 0), r[0], r[1]};
      }
    }
  }
  if (node.sign == 0 || best > 1e-6)
    throw Error(ErrorKind::InternalInconsistency, "could not locate a section node");
  return node;
}

}  // namespace

int surface_euler_characteristic(const Poly& f, std::uint64_t seed) {
  return surface_euler_data(f, seed).chi;
}

EulerData surface_euler_data(const Poly& f, std::uint64_t seed) {
  if (f.nvars() != 4 || !f.is_homogeneous() || f.degree() != 3)
    throw Error(ErrorKind::InvalidArgument, "expected a cubic form in four variables");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Matrix4 m;
    do {
      for (auto& row : m)
        for (auto& v : row) v = d(rng);
    } while (det4(m) == 0);
    const Poly g = apply4(f, m);
    // Base points of the pencil: the axis x = y = 0 meets the surface in
    // three distinct points.
    const Poly base = g.compose(std::vector<Poly>{Poly(1), Poly(1), Poly::variable(1, 0),
                                                  Poly::constant(1, 1)});
    const UPoly b = UPoly::from_poly(base, 0);
    if (b.degree() != 3 || !is_squarefree(b)) continue;
    const UPoly disc = section_discriminant(g);
    if (disc.degree() != 12 || !is_squarefree(disc)) continue;
    EulerData out;
    out.chi = count_distinct_real_roots(b);
    for (const auto& iv : isolate_squarefree(disc)) {
      const Interval fine = refine(disc, iv, Rational("1/1000000000000000000000000000000", 10));
      const Node n = locate_node(g, fine.mid());
      out.chi += n.sign;
      const std::array<double, 4> local{1, fine.approx(), n.z, n.w};
      std::array<double, 4> p{};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p[i] += m[i][j] * local[j];
      (n.sign > 0 ? out.acnodes : out.crunodes).push_back(p);
    }
    return out;
  }
  throw Error(ErrorKind::NearDiscriminant, "no generic pencil found");
}

}  // namespace affcubic::classify
