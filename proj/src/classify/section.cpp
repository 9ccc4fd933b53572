#include <algorithm>
#include <cmath>
#include <complex>

#include "affcubic/classify/classify.hpp"
#include "affcubic/algebra/roots.hpp"
#include "affcubic/error.hpp"

namespace affcubic::classify {

std::array<double, 3> PlaneSection::coordinates(const std::array<double, 4>& p) const {
  return {p[free_vars[0]], p[free_vars[1]], p[free_vars[2]]};
}

std::array<double, 4> PlaneSection::embed(const std::array<double, 3>& s) const {
  std::array<double, 4> x{};
  double acc = 0;
  for (int j = 0; j < 3; ++j) {
    x[free_vars[j]] = s[j];
    acc += plane[free_vars[j]].get_d() * s[j];
  }
  x[pivot] = -acc / plane[pivot].get_d();
  return x;
}

PlaneSection restrict_to_plane(const Poly& f, const Poly& plane) {
  if (plane.nvars() != 4 || plane.is_zero() || !plane.is_homogeneous() || plane.degree() != 1)
    throw Error(ErrorKind::InvalidArgument, "plane must be a nonzero linear form in x, y, z, w");
  PlaneSection s;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> e(4, 0);
    e[i] = 1;
    s.plane[i] = plane.coefficient(e);
  }
  s.pivot = 0;
  while (s.plane[s.pivot] == 0) ++s.pivot;
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (i != s.pivot) s.free_vars[n++] = i;
  std::vector<Poly> sub(4, Poly(3));
  for (int j = 0; j < 3; ++j) {
    sub[s.free_vars[j]] = Poly::variable(3, j);
    sub[s.pivot] -= (s.plane[s.free_vars[j]] / s.plane[s.pivot]) * Poly::variable(3, j);
  }
  s.restricted = f.compose(sub);
  return s;
}

bool transversal_at_infinity(const Poly& f, const Poly& plane) {
  const PlaneSection s = restrict_to_plane(f, plane);
  if (s.restricted.is_zero() || s.restricted.degree() != 3) return false;
  try {
    curve::analyze_cubic(s.restricted);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularCurve) return false;
    throw;
  }
}

int oval_line_count(const PlaneSection& section, const curve::PlaneCubicAnalysis& a,
                    const lines::LineSet& ls) {
  lines::Vec4 h;
  for (int i = 0; i < 4; ++i) h[i] = section.plane[i].get_d();
  int count = 0;
  for (const auto& line : lines::real_lines(ls)) {
    const lines::Vec4 x = lines::line_plane_point(line, h);
    const std::array<double, 4> p{x[0].real(), x[1].real(), x[2].real(), x[3].real()};
    try {
      count += curve::locate(a, section.coordinates(p), 1e-7).on_oval;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotOnCurve) throw;
      throw Error(ErrorKind::LocateFailure, "a real line meets the section off the curve");
    }
  }
  return count;
}

int complement_components(ProjectiveKind kind, int curve_components,
                          std::optional<int> oval_lines, std::optional<bool> oval_in_sphere) {
  if (kind == ProjectiveKind::C3b) {
    // The pseudoline is one-sided on the RP^2 component and cuts it into a
    // disk; the sphere stays whole unless it carries the oval. An oval on
    // either component is two-sided and separates its piece.
    if (curve_components == 1) return 2;
    if (!oval_in_sphere) throw Error(ErrorKind::InternalInconsistency, "oval position unknown");
    return 3;
  }
  if (curve_components == 1) return 1;
  if (!oval_lines) throw Error(ErrorKind::InternalInconsistency, "oval line count unknown");
  // The oval separates exactly when it is null-homologous, i.e. meets no line.
  return *oval_lines == 0 ? 2 : 1;
}

namespace {

// Real points of the oval, in P^3.
std::vector<std::array<double, 4>> oval_points(const PlaneSection& section,
                                               const curve::PlaneCubicAnalysis& a) {
  std::vector<std::array<double, 4>> out;
  for (const auto& cell : a.sweep) {
    if (out.size() >= 3) break;
    const auto& bc = cell.branch_component;
    int j = -1;
    for (std::size_t k = 0; k < bc.size(); ++k)
      if (bc[k] == curve::kOval) j = static_cast<int>(k);
    if (j < 0) continue;
    const double x = cell.sample.get_d();
    std::vector<std::complex<double>> c(4);
    for (int k = 0; k < 4; ++k) c[k] = a.y_coeffs[k].eval(x);
    auto roots = complex_roots(c);
    std::sort(roots.begin(), roots.end(), [](auto u, auto v) {
      return std::abs(u.imag()) < std::abs(v.imag());
    });
    std::vector<double> ys;
    for (std::size_t k = 0; k < bc.size(); ++k) ys.push_back(roots[k].real());
    std::sort(ys.begin(), ys.end());
    const std::array<double, 3> local{x, ys[j], 1};
    std::array<double, 3> s{};
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k) s[r] += a.transform[r][k].get_d() * local[k];
    out.push_back(section.embed(s));
  }
  return out;
}

}  // namespace

bool oval_in_sphere(const Poly& f, const PlaneSection& section,
                    const curve::PlaneCubicAnalysis& a, const std::array<double, 4>& q) {
  // On the line through q and an oval point o the other two roots u satisfy
  // F(q) u^2 + 3T(q,q,o) u + 3T(q,o,o) = 0. The sphere's points on the line
  // are the two roots adjacent to q, so o is on the sphere iff the other two
  // roots lie on the same side, i.e. F(q) T(q,o,o) > 0.
  const lines::CubicTensor t(f);
  const lines::Vec4 qv{q[0], q[1], q[2], q[3]};
  const double fq = t.eval(qv).real();
  int on = 0, off = 0;
  for (const auto& o : oval_points(section, a)) {
    const lines::Vec4 ov{o[0], o[1], o[2], o[3]};
    (fq * t(qv, ov, ov).real() > 0 ? on : off)++;
  }
  if (on > 0 && off > 0)
    throw Error(ErrorKind::Undecided, "oval points disagree about the sphere");
  if (on + off == 0) throw Error(ErrorKind::InternalInconsistency, "no oval points");
  return on > 0;
}

}  // namespace affcubic::classify
