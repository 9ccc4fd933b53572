#include "affcubic/classify/classify.hpp"
#include "affcubic/error.hpp"

namespace affcubic::classify {

std::string WallLabel::text() const {
  if (connected) return std::to_string(a);
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

WallRepresentative wall_label(const Poly& f2, const Poly& f3) {
  if (f2.nvars() != 3 || !f2.is_homogeneous() || f2.degree() != 2)
    throw Error(ErrorKind::InvalidArgument, "f2 must be a ternary quadratic form");
  if (f3.nvars() != 3 || !f3.is_homogeneous() || f3.degree() != 3)
    throw Error(ErrorKind::InvalidArgument, "f3 must be a ternary cubic form");
  curve::PlaneCubicAnalysis a;
  try {
    a = curve::analyze_cubic(f3);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularCurve)
      throw Error(ErrorKind::SingularCubic, "the cubic f3 is singular");
    throw;
  }
  const curve::Conic b = curve::make_conic(f2);
  if (b.degenerate) throw Error(ErrorKind::NotTransversal, "the conic f2 is degenerate");
  const curve::SixTuple s = curve::conic_cubic_intersection(b, a);
  if (!s.transversal)
    throw Error(ErrorKind::NotTransversal, "the conic is tangent to the cubic");

  WallRepresentative w;
  w.label = {a.component_count == 1, s.on_pseudoline, s.on_oval};
  if (w.label.connected) w.label.a = s.real_count;
  // w f2 + f3 in (x, y, z, w): node at (0:0:0:1)
  std::vector<Poly> up;
  for (int i = 0; i < 3; ++i) up.push_back(Poly::variable(4, i));
  w.surface = Poly::variable(4, 3) * f2.compose(up) + f3.compose(up);
  return w;
}

}  // namespace affcubic::classify
