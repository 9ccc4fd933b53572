#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "affcubic/algebra/poly.hpp"
#include "affcubic/algebra/resultant.hpp"
#include "affcubic/algebra/roots.hpp"
#include "affcubic/error.hpp"

using namespace affcubic;
using cd = std::complex<double>;

namespace {

UPoly upoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(v);
}

UPoly random_upoly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> coef(-20, 20);
  std::vector<Rational> c;
  for (int k = 0; k <= deg; ++k) c.emplace_back(coef(rng), 1 + (rng() % 4));
  if (c.back() == 0) c.back() = 1;
  return UPoly(c);
}

}  // namespace

TEST_CASE("parse and print round trip") {
  Poly p = parse_poly("x^3 + y^3 + z^3 + w^3");
  CHECK(to_string(p) == "x^3 + y^3 + z^3 + w^3");
  Poly q = parse_poly("4*(x^3+y^3+z^3+w^3) - (x+y+z+w)^3 + 1/100*x*y*z - 0.25 w^3");
  CHECK(parse_poly(to_string(q)) == q);
  CHECK(to_string(parse_poly(to_string(q))) == to_string(q));
  CHECK(parse_poly("2xy - 3/4 z") == parse_poly("2*x*y - 0.75*z"));
  CHECK_THROWS_AS(parse_poly("x + q"), Error);
  CHECK_THROWS_AS(parse_poly("x / y"), Error);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Poly r(4);
    for (int t = 0; t < 6; ++t) {
      Poly::Exponent e(4);
      for (auto& k : e) k = static_cast<int>(rng() % 3);
      r.add_term(e, Rational(static_cast<long>(rng() % 41) - 20, 1 + rng() % 7));
    }
    const std::string s = to_string(r);
    REQUIRE(parse_poly(s) == r);
    REQUIRE(to_string(parse_poly(s)) == s);
  }
}

TEST_CASE("decimal literals are exact") {
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
}

TEST_CASE("real_roots examples") {
  auto r = real_roots(upoly({-2, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].interval.hi <= 0);
  CHECK(r[1].interval.lo >= 0);
  auto iv = refine(upoly({-2, 0, 1}), r[1].interval, Rational(1, 1000000));
  CHECK(iv.approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));

  CHECK(real_roots(upoly({1, 0, 1})).empty());
  CHECK(real_roots(upoly({5})).empty());

  // (x-1)^3 (x+2), expanded by multiplication and checked by evaluation.
  UPoly f = upoly({-1, 1}) * upoly({-1, 1}) * upoly({-1, 1}) * upoly({2, 1});
  CHECK(f.eval(Rational(1)) == 0);
  CHECK(f.eval(Rational(-2)) == 0);
  auto roots = real_roots(f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].multiplicity == 1);
  CHECK(roots[0].interval.lo <= -2);
  CHECK(roots[0].interval.hi >= -2);
  CHECK(roots[1].multiplicity == 3);
  CHECK(roots[1].interval.lo <= 1);
  CHECK(roots[1].interval.hi >= 1);
}

TEST_CASE("real_roots isolating intervals are disjoint and exact") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    UPoly p = random_upoly(rng, 1 + static_cast<int>(rng() % 10));
    auto roots = real_roots(p);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
      CHECK(roots[i].interval.hi <= roots[i + 1].interval.lo);
    for (const auto& r : roots) {
      if (r.interval.is_point()) {
        CHECK(p.eval(r.interval.lo) == 0);
      } else {
        UPoly s = squarefree_part(p);
        CHECK(s.sign_at(r.interval.lo) * s.sign_at(r.interval.hi) < 0);
      }
    }
  }
}

TEST_CASE("real_roots stable under rational scaling") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    UPoly p = random_upoly(rng, 2 + static_cast<int>(rng() % 6));
    auto a = real_roots(p);
    auto b = real_roots(p * Rational(-7, 3));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].multiplicity == b[i].multiplicity);
      CHECK(a[i].interval.lo == b[i].interval.lo);
      CHECK(a[i].interval.hi == b[i].interval.hi);
    }
  }
}

TEST_CASE("complex_roots examples") {
  auto r = complex_roots(upoly({-1, 0, 0, 1}));
  REQUIRE(r.size() == 3);
  for (const cd& z : r) CHECK(std::abs(z * z * z - 1.0) < 1e-12);
  int real = 0;
  for (const cd& z : r) real += std::abs(z.imag()) < 1e-9;
  CHECK(real == 1);

  auto d = complex_roots(upoly({1, -2, 1}));
  for (const cd& z : d) CHECK(std::abs(z - 1.0) < 1e-6);

  UPoly p = upoly({1, 1, 0, 0, 0, 0, 1});
  auto s = complex_roots(p);
  REQUIRE(s.size() == 6);
  for (const cd& z : s) CHECK(std::abs(p.eval(z)) < 1e-12);
}

TEST_CASE("real and complex root counts agree") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 12);
    UPoly p = random_upoly(rng, deg);
    int exact_real = 0;
    for (const auto& r : real_roots(p)) exact_real += r.multiplicity;
    auto z = complex_roots(p);
    REQUIRE(static_cast<int>(z.size()) == p.degree());
    int nonreal = 0;
    for (const cd& v : z) nonreal += std::abs(v.imag()) > 1e-7 * std::max(1.0, std::abs(v));
    REQUIRE(nonreal % 2 == 0);
    CHECK(exact_real + nonreal == p.degree());
  }
}

TEST_CASE("resultant examples") {
  const std::vector<std::string> names{"x", "a", "b"};
  Poly r = resultant(parse_poly("x - a", names), parse_poly("x - b", names), 0);
  CHECK(r == parse_poly("a - b", names));
  CHECK(resultant(upoly({1, 0, 1}), upoly({-1, 1})) == 2);
  // Common root gives zero.
  CHECK(resultant(upoly({-1, 0, 1}), upoly({-1, 1})) == 0);
}

TEST_CASE("resultant matches product of root differences") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    UPoly p = random_upoly(rng, 1 + static_cast<int>(rng() % 4));
    UPoly q = random_upoly(rng, 1 + static_cast<int>(rng() % 4));
    const double res = resultant(p, q).get_d();
    auto a = complex_roots(p), b = complex_roots(q);
    cd prod = std::pow(p.leading().get_d(), q.degree()) * std::pow(q.leading().get_d(), p.degree());
    for (auto& x : a)
      for (auto& y : b) prod *= (x - y);
    CHECK(std::abs(prod.real() - res) <= 1e-7 * std::max(1.0, std::abs(res)));
    CHECK(std::abs(prod.imag()) <= 1e-7 * std::max(1.0, std::abs(res)));
    const int sign = (p.degree() * q.degree()) % 2 ? -1 : 1;
    CHECK(resultant(q, p) == resultant(p, q) * sign);
  }
}

TEST_CASE("bivariate elimination has expected degree") {
  const std::vector<std::string> names{"x", "y"};
  Poly circle = parse_poly("x^2 + y^2 - 4", names);
  Poly cubic = parse_poly("y^2 - x^3 + x", names);
  UPoly r = eliminate(circle, cubic, 1, 0);
  // Substituting y^2 = 4 - x^2 gives (4 - x^2 - x^3 + x)^2.
  UPoly direct = upoly({4, 1, -1, -1});
  CHECK(r == direct * direct);
}
