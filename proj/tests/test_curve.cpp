#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "affcubic/algebra/roots.hpp"
#include "affcubic/curve/curve.hpp"
#include "affcubic/curve/detail.hpp"
#include "affcubic/error.hpp"

using namespace affcubic;
using namespace affcubic::curve;

namespace {

Poly P(const char* s) { return parse_poly(s, {"x", "y", "z"}); }

const char* kTwo = "y^2*z - x^3 + x*z^2";  // y^2 = x^3 - x

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InternalInconsistency;
}

Point3 to_point(const std::array<cd, 2>& xy) { return {xy[0], xy[1], 1.0}; }

// Chord-tangent addition on y^2 = x^3 + a x + b, affine points only.
std::array<cd, 2> add(const std::array<cd, 2>& p, const std::array<cd, 2>& q, double a) {
  cd lambda;
  if (std::abs(p[0] - q[0]) < 1e-12)
    lambda = (3.0 * p[0] * p[0] + a) / (2.0 * p[1]);
  else
    lambda = (q[1] - p[1]) / (q[0] - p[0]);
  const cd x = lambda * lambda - p[0] - q[0];
  return {x, lambda * (p[0] - x) - p[1]};
}

}  // namespace

TEST_CASE("component counts of reference cubics") {
  CHECK(analyze_cubic(P(kTwo)).component_count == 2);
  CHECK(analyze_cubic(P(kTwo)).oval_id == kOval);
  CHECK(analyze_cubic(P("y^2*z - x^3 - x*z^2")).component_count == 1);
  CHECK_FALSE(analyze_cubic(P("y^2*z - x^3 - x*z^2")).oval_id.has_value());
  CHECK(analyze_cubic(P("x^3 + y^3 + z^3")).component_count == 1);
}

TEST_CASE("component count matches the Weierstrass discriminant sign") {
  // y^2 = x^3 + p x + q has an oval iff 4p^3 + 27q^2 < 0; a random
  // projective change of coordinates must not matter.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  int seen_two = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Rational p(d(rng), 2), q(d(rng), 3);
    const Rational disc = 4 * p * p * p + 27 * q * q;
    if (disc == 0) continue;
    Poly w = P("y^2*z - x^3") - p * P("x*z^2") - q * P("z^3");
    w = curve::detail::apply(w, curve::detail::random_transform(rng));
    const int expected = disc < 0 ? 2 : 1;
    seen_two += expected == 2;
    CHECK(analyze_cubic(w, trial + 5).component_count == expected);
  }
  CHECK(seen_two > 2);
}

TEST_CASE("singular cubics are rejected") {
  CHECK(kind_of([] { analyze_cubic(P("y^2*z - x^3")); }) == ErrorKind::SingularCurve);
  CHECK(kind_of([] { analyze_cubic(P("y^2*z - x^3 - x^2*z")); }) == ErrorKind::SingularCurve);
  CHECK(kind_of([] { analyze_cubic(P("x*y*z")); }) == ErrorKind::SingularCurve);
}

TEST_CASE("locate") {
  const auto a = analyze_cubic(P(kTwo));
  CHECK(locate(a, {-1, 0, 1}).on_oval);
  CHECK(locate(a, {-0.5, std::sqrt(0.375), 1}).on_oval);
  CHECK_FALSE(locate(a, {2, std::sqrt(6.0), 1}).on_oval);
  CHECK_FALSE(locate(a, {1, 0, 1}).on_oval);
  CHECK_FALSE(locate(a, {0, 1, 0}).on_oval);  // the flex at infinity
  CHECK(kind_of([&] { locate(a, {0, 1, 1}); }) == ErrorKind::NotOnCurve);
}

TEST_CASE("line parity per component") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (const char* text : {kTwo, "x^3 + y^3 + z^3 - 5*x*y*z", "y^2*z - x^3 - x*z^2"}) {
    const Poly f = P(text);
    const auto a = analyze_cubic(f);
    for (int trial = 0; trial < 1000 / 3; ++trial) {
      std::array<double, 3> u{g(rng), g(rng), g(rng)}, v{g(rng), g(rng), g(rng)};
      // f(u + t v) as a cubic in t, by interpolation at 4 nodes.
      std::vector<cd> vals, coeffs(4);
      const double nodes[4] = {-1, 0, 1, 2};
      for (double t : nodes) {
        std::array<double, 3> p{u[0] + t * v[0], u[1] + t * v[1], u[2] + t * v[2]};
        vals.push_back(f.eval<double>(p));
      }
      // Newton divided differences to monomial form.
      std::vector<double> dd(vals.size());
      for (int i = 0; i < 4; ++i) dd[i] = vals[i].real();
      for (int k = 1; k < 4; ++k)
        for (int i = 3; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - k]);
      std::vector<double> mono{dd[3]};
      for (int i = 2; i >= 0; --i) {
        std::vector<double> next(mono.size() + 1, 0.0);
        for (std::size_t j = 0; j < mono.size(); ++j) {
          next[j + 1] += mono[j];
          next[j] -= nodes[i] * mono[j];
        }
        next[0] += dd[i];
        mono = next;
      }
      for (int k = 0; k < 4; ++k) coeffs[k] = mono[k];
      int count[2] = {0, 0};
      for (const cd& t : complex_roots(coeffs)) {
        if (std::abs(t.imag()) > 1e-7) continue;
        const double s = t.real();
        const auto loc = locate(a, {u[0] + s * v[0], u[1] + s * v[1], u[2] + s * v[2]}, 1e-6);
        ++count[loc.component];
      }
      CHECK(count[kPseudoline] % 2 == 1);
      CHECK(count[kOval] % 2 == 0);
    }
  }
}

TEST_CASE("conics") {
  CHECK(make_conic(P("x^2 + y^2 + z^2")).empty_real_locus);
  CHECK(make_conic(P("-x^2 - 2*y^2 - z^2 + x*y")).empty_real_locus);
  CHECK_FALSE(make_conic(P("x^2 + y^2 - z^2")).empty_real_locus);
  CHECK_FALSE(make_conic(P("x^2 + y^2")).empty_real_locus);
  CHECK(make_conic(P("x^2 - y^2")).degenerate);
}

TEST_CASE("empty conic meets the cubic in six imaginary points") {
  const auto a = analyze_cubic(P(kTwo));
  const auto s = conic_cubic_intersection(make_conic(P("x^2 + y^2 + z^2")), a);
  CHECK(s.real_count == 0);
  CHECK(s.transversal);
  int total = 0;
  for (const auto& p : s.points) total += p.multiplicity;
  CHECK(total == 6);
}

TEST_CASE("circle intersections agree with the substitution oracle") {
  // (x - c)^2 + y^2 = r^2 against y^2 = x^3 - x: the x-coordinates solve
  // (x - c)^2 + x^3 - x - r^2 = 0 and each root with x^3 - x > 0 gives two
  // points, on the oval iff x < 0.
  const auto a = analyze_cubic(P(kTwo));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-12, 12), rr(1, 12);
  for (int trial = 0; trial < 30; ++trial) {
    Rational c(d(rng), 4), r(rr(rng), 4);
    c.canonicalize();
    r.canonicalize();
    const Poly circle = P("x^2 + y^2") - 2 * c * P("x*z") + (c * c - r * r) * P("z^2");
    const UPoly h({c * c - r * r, Rational(-1) - 2 * c, Rational(1), Rational(1)});
    int oval = 0, pseudo = 0;
    for (const auto& root : real_roots(h)) {
      const Interval iv = refine(h, root.interval, Rational("1/1000000000000", 10));
      const double x = iv.approx();
      // A root at a vertical tangent (y = 0) is one point of multiplicity 2.
      if (x * x * x - x < -1e-9) continue;
      (x < 0.5 ? oval : pseudo) += 2;
    }
    const auto s = conic_cubic_intersection(make_conic(circle), a, trial);
    CHECK(s.on_oval == oval);
    CHECK(s.on_pseudoline == pseudo);
    CHECK(s.real_count == oval + pseudo);
    for (const auto& p : s.points) {
      CHECK(std::abs(a.cubic.eval<cd>(p.point)) < 1e-9);
      CHECK(std::abs(circle.eval<cd>(p.point)) < 1e-9);
    }
  }
}

TEST_CASE("tangent conic is not transversal") {
  // Tangent to y^2 = x^3 - x at (-1, 0), where the tangent line is x = -z.
  const auto a = analyze_cubic(P(kTwo));
  const auto s = conic_cubic_intersection(make_conic(P("x^2 - x*z - 2*z^2 + y^2")), a);
  CHECK_FALSE(s.transversal);
  bool found = false;
  for (const auto& p : s.points)
    if (p.multiplicity == 2) {
      found = true;
      CHECK(p.real);
      CHECK(p.component == kOval);
      CHECK(distance(p.point, {-1.0, 0.0, 1.0}) < 1e-6);
    }
  CHECK(found);
}

TEST_CASE("conic through five points") {
  using R3 = std::array<Rational, 3>;
  const std::vector<R3> circle{{3, 4, 5}, {5, 12, 13}, {1, 0, 1}, {0, 1, 1}, {8, 15, 17}};
  CHECK(conic_through_five(circle).form == P("x^2 + y^2 - z^2"));

  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<R3> pts;
    for (int i = 0; i < 5; ++i) {
      R3 p{Rational(d(rng), 3), Rational(d(rng), 7), 1};
      for (auto& v : p) v.canonicalize();
      pts.push_back(p);
    }
    try {
      const Conic c = conic_through_five(pts);
      for (const auto& p : pts) CHECK(c.form.eval<Rational>(p) == 0);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RankDeficient);
    }
  }
  const std::vector<R3> three_collinear{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {1, 2, 1}};
  const Conic pair = conic_through_five(three_collinear);
  CHECK(pair.degenerate);
  const std::vector<R3> four_collinear{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 1}, {1, 2, 1}};
  CHECK(kind_of([&] { conic_through_five(four_collinear); }) == ErrorKind::RankDeficient);
}

TEST_CASE("residual point satisfies the group law") {
  // On y^2 = x^3 - x with the flex at infinity as origin, the six points cut
  // by a conic sum to zero.
  const Poly f = P(kTwo);
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::array<cd, 2>> affine;
    for (int i = 0; i < 5; ++i) {
      const cd x(g(rng), g(rng));
      affine.push_back({x, std::sqrt(x * x * x - x)});
    }
    std::vector<Point3> five;
    for (const auto& p : affine) five.push_back(to_point(p));
    auto sum = affine[0];
    for (int i = 1; i < 5; ++i) sum = add(sum, affine[i], -1);
    const Point3 expected = to_point({sum[0], -sum[1]});
    CHECK(distance(residual_point(f, five), expected) < 1e-7);
  }
}

TEST_CASE("residual point: real sixth point and drop-one round trip") {
  const auto a = analyze_cubic(P(kTwo));
  const auto s = conic_cubic_intersection(make_conic(P("x^2 + y^2 - 4*z^2")), a);
  REQUIRE(s.points.size() == 6);
  CHECK(s.real_count == 2);
  for (std::size_t drop = 0; drop < 6; ++drop) {
    std::vector<Point3> five;
    for (std::size_t i = 0; i < 6; ++i)
      if (i != drop) five.push_back(s.points[i].point);
    CHECK(distance(residual_point(a, five), s.points[drop].point) < 1e-8);
  }
  // Three real points plus a conjugate pair force a real sixth point.
  std::vector<Point3> five;
  for (double x : {-0.5, 1.5, 2.0}) five.push_back({x, std::sqrt(x * x * x - x), 1.0});
  const cd z(0.3, 0.8), w = std::sqrt(z * z * z - z);
  five.push_back({z, w, 1.0});
  five.push_back({std::conj(z), std::conj(w), 1.0});
  const Point3 r = residual_point(a, five);
  for (const auto& c : r) CHECK(std::abs(c.imag()) < 1e-8);
}
